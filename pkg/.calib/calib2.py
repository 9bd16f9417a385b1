import pickle, time
from dataclasses import replace
from bevdistill.pipeline import TrainConfig, train

tr, ev = pickle.load(open("/root/pkg/.calib/ds_ref.pkl", "rb"))
rows = {
    "pgf2m_only": TrainConfig(epochs=12, batch_size=8, n_cameras=2, use_fd=False, use_ld=False, lr=5e-3),
    "fd_only": TrainConfig(epochs=12, batch_size=8, n_cameras=2, use_fd=True, use_ld=False, lr=5e-3),
    "ld_only": TrainConfig(epochs=12, batch_size=8, n_cameras=2, use_fd=False, use_ld=True, lr=5e-3),
}
for name, cfg in rows.items():
    t0 = time.time()
    store, recs = train(replace(cfg, seed=1), tr, ev)
    print(f"{name}: {time.time()-t0:.0f}s", flush=True)
    print("  student:", [round(r['student_miou'], 4) for r in recs], flush=True)
    print("  teacher:", [round(r['teacher_miou'], 4) for r in recs], flush=True)
