import sys, time
import numpy as np
from kktrecon import datasets, training, mlp
from kktrecon.mlp import ModelSpec
from kktrecon.training import TrainConfig, init_params

lr = float(sys.argv[1])
epochs = int(sys.argv[2])
spec = ModelSpec((2, 1000, 1000, 1))
data = datasets.make_circle_2d(20)
cfg = TrainConfig(learning_rate=lr, epochs=epochs, seed=0, loss_stop_threshold=1e-6)
theta = init_params(spec, cfg)
kernel = training._FullBatchKernel(spec, data.X, data.y.astype(float))
t0 = time.perf_counter()
log_at = 10000
epoch = 0
while True:
    loss, grad, q = kernel.loss_and_grad(theta, seed_scale=lr)
    if not np.isfinite(loss):
        print(f"lr={lr} DIVERGED at {epoch}", flush=True); break
    if epoch % log_at == 0 or loss < 1e-6 or epoch == epochs:
        print(f"lr={lr} epoch={epoch} loss={loss:.3e} err={(q<=0).mean():.2f} "
              f"minq={q.min():.3f} |th|={np.linalg.norm(theta):.1f} "
              f"t={time.perf_counter()-t0:.0f}s", flush=True)
    if loss < 1e-6 or epoch == epochs:
        np.save(f"/root/pkg/.calib/theta2d_lr{lr}.npy", theta)
        print(f"lr={lr} FINAL epoch={epoch} loss={loss:.3e}", flush=True)
        break
    theta -= grad
    epoch += 1
