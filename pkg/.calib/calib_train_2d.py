import time, sys
import numpy as np
from kktrecon import mlp, datasets, training
from kktrecon.mlp import ModelSpec

spec = ModelSpec((2, 1000, 1000, 1))
data = datasets.make_circle_2d(20)

for lr in [0.1, 0.05, 0.02, 0.01]:
    cfg = training.TrainConfig(learning_rate=lr, epochs=300_000, seed=0,
                               loss_stop_threshold=1e-6)
    theta0 = training.init_params(spec, cfg)
    t0 = time.perf_counter()
    try:
        theta, log = training.train_full_batch(spec, theta0, data, cfg)
    except Exception as e:
        print(f"lr={lr}: DIVERGED: {e}", flush=True)
        continue
    dt = time.perf_counter() - t0
    rep = training.evaluate(spec, theta, data)
    last = log.records[-1]
    print(f"lr={lr}: epochs={last.epoch} loss={last.loss:.3e} time={dt:.1f}s "
          f"|theta|={last.theta_norm:.2f} min_margin={rep.min_margin:.3f} "
          f"max_margin={rep.max_margin:.3f} acc={rep.accuracy}", flush=True)
    # KKT lambda scale via quick NNLS (projected gradient on the gram)
    G = mlp.grad_theta(spec, theta, data.X)           # exact-step, (20, p)
    A = data.y[:, None] * G
    K = A @ A.T
    c = A @ theta
    lam = np.zeros(20)
    s = 1.0 / np.linalg.eigvalsh(K)[-1]
    for _ in range(200000):
        g = 2 * (K @ lam - c)
        lam_new = np.maximum(lam - s * g, 0.0)
        if np.linalg.norm(lam_new - lam) < 1e-12 * max(1, np.linalg.norm(lam)):
            lam = lam_new; break
        lam = lam_new
    resid = theta - A.T @ lam
    print(f"    lambda* min={lam.min():.3f} max={lam.max():.3f} "
          f"rel_resid={np.linalg.norm(resid)/np.linalg.norm(theta):.4f} "
          f"margins(q)={np.sort(rep.margins)[:4]}", flush=True)
    np.save(f"/root/pkg/.calib/theta2d_lr{lr}.npy", theta)
    if last.loss < 1e-6:
        break
