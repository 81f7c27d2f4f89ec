import sys, time
from relstitch.trainer import TrainConfig, train
from relstitch import agent
mode = sys.argv[1]
cfg = TrainConfig(total_steps=300_000, mode=mode, seed=0)
t = time.time()
def cb(i, info):
    if "eval_mean" in info or i % 10 == 0:
        print(f"{time.time()-t:7.0f}s it{i} " + " ".join(f"{k}={v:.4g}" for k, v in info.items() if isinstance(v, float)), flush=True)
r = train(cfg, on_iteration=cb)
r.write_metrics(f"metrics_{mode}.csv")
agent.save(r.bundle, f"{mode}.r3lp")
