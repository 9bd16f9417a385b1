# Hypothesis: FD drag comes from channel-basis mismatch between the two
# independently-initialized FPDs. Align their init and re-measure.
import pickle, time
from dataclasses import replace
import bevdistill.pipeline as P

orig_build = P.build_models
def aligned_build(store, cfg, n_classes):
    orig_build(store, cfg, n_classes)
    for name, t in store.params.items():
        if name.startswith("teacher/fpd/"):
            t.data[...] = store.params["student/fpd/" + name[12:]].data
P.build_models = aligned_build

tr, ev = pickle.load(open("/root/pkg/.calib/ds_ref.pkl", "rb"))
rows = {
    "fd_only_aligned": P.TrainConfig(epochs=12, batch_size=8, n_cameras=2, use_fd=True, use_ld=False, lr=5e-3),
    "full_aligned": P.TrainConfig(epochs=12, batch_size=8, n_cameras=2, lr=5e-3),
}
for name, cfg in rows.items():
    t0 = time.time()
    store, recs = P.train(replace(cfg, seed=1), tr, ev)
    print(f"{name}: {time.time()-t0:.0f}s", flush=True)
    print("  student:", [round(r['student_miou'], 4) for r in recs], flush=True)
    print("  teacher:", [round(r['teacher_miou'], 4) for r in recs], flush=True)
    print("  l_feature:", [round(r['l_feature'], 3) for r in recs], flush=True)
