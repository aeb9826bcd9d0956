import sys, time
import numpy as np
from kktrecon import datasets, training, analysis, mlp
from kktrecon.mlp import ModelSpec
from kktrecon.training import TrainConfig, init_params

w1std = float(sys.argv[1]); deep = float(sys.argv[2]); lr = float(sys.argv[3])
spec = ModelSpec((2, 1000, 1000, 1))
data = datasets.make_circle_2d(20)
cfg = TrainConfig(learning_rate=lr, epochs=500_000, seed=0, first_layer_init_std=w1std)
theta = init_params(spec, cfg)
W, B = mlp.param_views(spec, theta)
W[1] *= deep; W[2] *= deep
kernel = training._FullBatchKernel(spec, data.X, data.y.astype(float))
stops = {2000, 5000, 10000, 25000, 50000, 100000, 200000, 350000, 500000}
t0 = time.perf_counter()
tag = f"w{w1std}_d{deep}_lr{lr}"
for epoch in range(500001):
    loss, grad, q = kernel.loss_and_grad(theta, seed_scale=lr)
    if not np.isfinite(loss):
        print(f"{tag} DIVERGED at {epoch}", flush=True); break
    if epoch in stops:
        diag = analysis.kkt_residual(spec, theta, data)
        lam = diag.lambdas
        print(f"{tag} e={epoch} loss={loss:.3e} q=[{q.min():.2f},{q.max():.2f}] "
              f"|th|={np.linalg.norm(theta):.2f} lam*={lam.min():.2f}/{np.median(lam):.2f}/{lam.max():.2f} "
              f"n>=5:{(lam>=5).sum()} resid={diag.relative_residual:.4f} t={time.perf_counter()-t0:.0f}s",
              flush=True)
        np.save(f"/root/pkg/.calib/th2d_{tag}_e{epoch}.npy", theta)
    theta -= grad
print("DEEPDONE", flush=True)
