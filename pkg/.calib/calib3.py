import pickle, time, os, sys
from dataclasses import replace
from bevdistill.pipeline import TrainConfig, make_dataset, train
from bevdistill.sim import BeamSpec

CACHE = "/root/pkg/.calib/ds_sparse.pkl"
beam = BeamSpec(n_beams=8, n_azimuth=120)
if os.path.exists(CACHE):
    tr, ev = pickle.load(open(CACHE, "rb"))
else:
    t0 = time.time()
    tr = make_dataset(200, seed=101, beam_spec=beam)
    ev = make_dataset(50, seed=901, beam_spec=beam)
    pickle.dump((tr, ev), open(CACHE, "wb"))
    print(f"gen: {time.time()-t0:.0f}s", flush=True)

rows = {
    "baseline": TrainConfig(epochs=12, batch_size=8, n_cameras=0, use_pgf2m=False, use_fd=False, use_ld=False, lr=5e-3),
    "full": TrainConfig(epochs=12, batch_size=8, n_cameras=2, lr=5e-3),
    "fd_only": TrainConfig(epochs=12, batch_size=8, n_cameras=2, use_fd=True, use_ld=False, lr=5e-3),
    "ld_only": TrainConfig(epochs=12, batch_size=8, n_cameras=2, use_fd=False, use_ld=True, lr=5e-3),
}
for name, cfg in rows.items():
    t0 = time.time()
    store, recs = train(replace(cfg, seed=1), tr, ev)
    print(f"{name}: {time.time()-t0:.0f}s", flush=True)
    print("  student:", [round(r['student_miou'], 4) for r in recs], flush=True)
    print("  teacher:", [round(r['teacher_miou'], 4) for r in recs], flush=True)
    print("  l_feature:", [round(r['l_feature'], 4) for r in recs], flush=True)
    print("  l_ce:", [round(r['l_ce'], 4) for r in recs], flush=True)
