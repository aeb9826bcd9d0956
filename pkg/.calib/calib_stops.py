import time
import numpy as np
from kktrecon import datasets, training, analysis
from kktrecon.mlp import ModelSpec
from kktrecon.training import TrainConfig, init_params

spec = ModelSpec((2, 1000, 1000, 1))
data = datasets.make_circle_2d(20)
cfg = TrainConfig(learning_rate=0.02, epochs=400_000, seed=0, first_layer_init_std=1e-4)
theta = init_params(spec, cfg)
kernel = training._FullBatchKernel(spec, data.X, data.y.astype(float))
stops = {5000, 10000, 25000, 50000, 100000, 200000, 400000}
t0 = time.perf_counter()
for epoch in range(400001):
    loss, grad, q = kernel.loss_and_grad(theta, seed_scale=0.02)
    if epoch in stops:
        diag = analysis.kkt_residual(spec, theta, data)
        lam = diag.lambdas
        print(f"epoch={epoch} loss={loss:.3e} minq={q.min():.2f} maxq={q.max():.2f} "
              f"|th|={np.linalg.norm(theta):.1f} lam*[min/med/max]="
              f"{lam.min():.2f}/{np.median(lam):.2f}/{lam.max():.2f} "
              f"(n>=5: {(lam>=5).sum()}) resid={diag.relative_residual:.4f} "
              f"t={time.perf_counter()-t0:.0f}s", flush=True)
        np.save(f"/root/pkg/.calib/th2d_e{epoch}.npy", theta)
    theta -= grad
print("DONE", flush=True)
