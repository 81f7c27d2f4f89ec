import sys, time, numpy as np
import relstitch.envkit as ek
sp = float(sys.argv[1]); steps = int(sys.argv[2]); mode = sys.argv[3] if len(sys.argv) > 3 else "absolute"
ek.CHECKPOINT_SPACING = sp
ek.generate_track.cache_clear()
from relstitch.trainer import TrainConfig, train, random_returns, eval_seeds
rr = random_returns([ek.VariationSpec("green","standard")]*50, list(range(2**30, 2**30+50)), np.random.default_rng(0))
print("random", rr.mean(), rr.std(), flush=True)
cfg = TrainConfig(total_steps=steps, mode=mode, seed=0, eval_interval=10_000)
t = time.time()
def cb(i, info):
    if "eval_mean" in info:
        print(f"{time.time()-t:6.0f}s it{i} ent={info['entropy']:.3f} kl={info['approx_kl']:.4f} eval={info['eval_mean']:.1f}", flush=True)
train(cfg, on_iteration=cb)
