# Shared BEV-FPD between branches: teacher forward reuses student/fpd.
import pickle, time
from dataclasses import replace
import bevdistill.pipeline as P
from bevdistill.fpd import fpd_forward, build_fpd
from bevdistill.fusion import pgf2m, build_pgf2m
from bevdistill.lidar_enc import build_pillar_net, build_lidar_stem
from bevdistill.cam_enc import build_camera_net

def shared_build(store, cfg, n_classes):
    build_pillar_net(store, "student/lidar", cfg.c_low)
    build_lidar_stem(store, "student/lidar", cfg.c_low, cfg.c_bev)
    build_fpd(store, "student/fpd", cfg.fpd_layers, cfg.c_bev, cfg.c_cap, n_classes)
    if cfg.n_cameras > 0:
        build_camera_net(store, "teacher/cam", cfg.c_pv, cfg.c_bev, cfg.n_depth)
        build_pgf2m(store, "teacher/pgf2m", cfg.c_bev)

def shared_teacher(samples, store, cfg, frustum, bev_spec, cam_idx, f_lidar_batch):
    f_cam = P._camera_forward(samples, store, cfg, frustum, bev_spec, cam_idx)
    f_fusion = pgf2m(f_cam, f_lidar_batch, store, "teacher/pgf2m")
    return fpd_forward(f_fusion, store, "student/fpd", cfg.fpd_layers)

P.build_models = shared_build
P._teacher_forward = shared_teacher

tr, ev = pickle.load(open("/root/pkg/.calib/ds_ref.pkl", "rb"))
rows = {
    "shared_pgf2m": P.TrainConfig(epochs=12, batch_size=8, n_cameras=2, use_fd=False, use_ld=False, lr=5e-3),
    "shared_full": P.TrainConfig(epochs=12, batch_size=8, n_cameras=2, lr=5e-3),
    "shared_fd": P.TrainConfig(epochs=12, batch_size=8, n_cameras=2, use_fd=True, use_ld=False, lr=5e-3),
    "shared_ld": P.TrainConfig(epochs=12, batch_size=8, n_cameras=2, use_fd=False, use_ld=True, lr=5e-3),
}
for name, cfg in rows.items():
    t0 = time.time()
    store, recs = P.train(replace(cfg, seed=1), tr, ev)
    print(f"{name}: {time.time()-t0:.0f}s", flush=True)
    print("  student:", [round(r['student_miou'], 4) for r in recs], flush=True)
    print("  teacher:", [round(r['teacher_miou'], 4) for r in recs], flush=True)
    print("  l_feature:", [round(r['l_feature'], 3) for r in recs], flush=True)
