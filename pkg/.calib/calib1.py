import pickle, time, os
from dataclasses import replace
from bevdistill.pipeline import TrainConfig, make_dataset, train

CACHE = "/root/pkg/.calib/ds_ref.pkl"
if os.path.exists(CACHE):
    tr, ev = pickle.load(open(CACHE, "rb"))
else:
    t0 = time.time()
    tr = make_dataset(200, seed=101)
    ev = make_dataset(50, seed=901)
    pickle.dump((tr, ev), open(CACHE, "wb"))
    print(f"gen: {time.time()-t0:.0f}s", flush=True)

base = TrainConfig(epochs=12, batch_size=8, n_cameras=0, use_pgf2m=False,
                   use_fd=False, use_ld=False, lr=5e-3)
full = TrainConfig(epochs=12, batch_size=8, n_cameras=2, lr=5e-3)
for name, cfg in [("baseline", base), ("full", full)]:
    t0 = time.time()
    store, recs = train(replace(cfg, seed=1), tr, ev)
    print(f"{name}: {time.time()-t0:.0f}s", flush=True)
    print("  student:", [round(r['student_miou'], 4) for r in recs], flush=True)
    print("  teacher:", [round(r['teacher_miou'], 4) for r in recs], flush=True)
