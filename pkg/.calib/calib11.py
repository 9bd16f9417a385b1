# Spec-default capacity probe: C_low=32, C_bev=64, C_cap=128, C_pv=32.
import pickle, time
import bevdistill.pipeline as P

tr, ev = pickle.load(open("/root/pkg/.calib/ds_ref.pkl", "rb"))
widths = dict(c_low=32, c_bev=64, c_cap=128, c_pv=32, n_depth=16, d_max=17.0)
base = dict(epochs=12, batch_size=8, lr=5e-3, seed=1, **widths)
rows = {
    "baseline": P.TrainConfig(n_cameras=0, use_pgf2m=False, use_fd=False,
                              use_ld=False, **base),
    "full": P.TrainConfig(n_cameras=2, **base),
}
for name, cfg in rows.items():
    t0 = time.time()
    store, recs = P.train(cfg, tr, ev)
    print(f"{name}: {time.time()-t0:.0f}s", flush=True)
    print("  student:", [round(r['student_miou'], 4) for r in recs], flush=True)
    print("  teacher:", [round(r['teacher_miou'], 4) for r in recs], flush=True)
    print("  l_feature:", [round(r.get('l_feature', 0.0), 3) for r in recs], flush=True)
