import numpy as np
from relstitch import tensorcore as tc, trainer
from relstitch.trainer import TrainConfig
norms = []
real = tc.clip_grad_norm
def rec(store, m):
    enc = np.sqrt(sum(float((t.grad**2).sum()) for n, t in store.items() if n.startswith("encoder")))
    ctl = np.sqrt(sum(float((t.grad**2).sum()) for n, t in store.items() if n.startswith("controller")))
    norms.append((enc, ctl))
    return real(store, m)
tc.clip_grad_norm = rec
for mode in ("absolute", "relative"):
    norms.clear()
    out = []
    trainer.train(TrainConfig(total_steps=4096, mode=mode, eval_interval=10**9), on_iteration=lambda i, info: out.append((info["approx_kl"], info["entropy"], info["loss_value"])))
    print(mode, "kl/ent/vloss", out)
    a = np.array(norms); print(" enc grad", a[:, 0].mean(), "ctl grad", a[:, 1].mean())
