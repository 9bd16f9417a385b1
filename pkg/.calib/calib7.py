# Undertrained regime probe: lr 2e-3 so the student is still climbing at ep12.
import pickle, time
from dataclasses import replace
import bevdistill.pipeline as P

tr, ev = pickle.load(open("/root/pkg/.calib/ds_ref.pkl", "rb"))
base = dict(epochs=12, batch_size=8, lr=2e-3, seed=1)
rows = {
    "base2e3": P.TrainConfig(n_cameras=0, use_pgf2m=False, use_fd=False,
                             use_ld=False, **base),
    "full2e3": P.TrainConfig(n_cameras=2, **base),
    "fd2e3": P.TrainConfig(n_cameras=2, use_fd=True, use_ld=False, **base),
    "ld2e3": P.TrainConfig(n_cameras=2, use_fd=False, use_ld=True, **base),
}
for name, cfg in rows.items():
    t0 = time.time()
    store, recs = P.train(cfg, tr, ev)
    print(f"{name}: {time.time()-t0:.0f}s", flush=True)
    print("  student:", [round(r['student_miou'], 4) for r in recs], flush=True)
    print("  teacher:", [round(r['teacher_miou'], 4) for r in recs], flush=True)
    print("  l_feature:", [round(r.get('l_feature', 0.0), 3) for r in recs], flush=True)
