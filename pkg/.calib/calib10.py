# Diagnose WHERE full-scheme students lose mIoU vs baseline:
# per-class IoU and observed/unobserved-cell accuracy; plus a variant with
# the pgf2m LiDAR input detached (teacher seg loss can't pull the encoder).
import pickle, time
from dataclasses import replace
import numpy as np
import bevdistill.pipeline as P
import bevdistill.fusion as FU
from bevdistill import engine as E
from bevdistill.engine import Tensor
from bevdistill.cam_enc import build_frustum
from bevdistill.lidar_enc import pillarize

tr, ev = pickle.load(open("/root/pkg/.calib/ds_ref.pkl", "rb"))
base = dict(epochs=12, batch_size=8, lr=5e-3, seed=1)

real_pgf2m = FU.pgf2m
def detached_pgf2m(f_cam, f_lidar, store, prefix):
    return real_pgf2m(f_cam, Tensor(f_lidar.data), store, prefix)

rows = {
    "baseline": (P.TrainConfig(n_cameras=0, use_pgf2m=False, use_fd=False,
                               use_ld=False, **base), False),
    "full": (P.TrainConfig(n_cameras=2, **base), False),
    "full_detached": (P.TrainConfig(n_cameras=2, **base), True),
}

def analyze(store, cfg, name):
    frustum = None
    if cfg.n_cameras > 0:
        frustum = build_frustum(replace(ev.cam_spec, n_cameras=cfg.n_cameras),
                                ev.bev_spec, cfg.d_min, cfg.d_max, cfg.n_depth)
    cam_idx = P.camera_subset(ev, cfg.n_cameras)
    preds, gts, obs = [], [], []
    with E.no_grad():
        for s in ev.samples:
            _, student, _ = P._student_forward([s], store, cfg, ev.bev_spec)
            preds.append(np.argmax(student.probs.data[0], axis=0))
            gts.append(s.labels)
            pt = pillarize(s.scan, ev.bev_spec, cfg.max_points)
            o = np.zeros(s.labels.shape, bool)
            o[pt.coords[:, 0], pt.coords[:, 1]] = True
            obs.append(o)
    E.reset_tape()
    preds, gts, obs = np.array(preds), np.array(gts), np.array(obs)
    sc = P.miou(preds, gts, ev.bev_spec.num_classes, P.FOREGROUND[cfg.task])
    acc_o = float((preds == gts)[obs].mean())
    acc_u = float((preds == gts)[~obs].mean())
    print(f"{name}: mIoU={sc['mean']:.4f} per_class=" +
          str({k: round(v, 4) for k, v in sc['per_class'].items()}) +
          f" acc_obs={acc_o:.4f} acc_unobs={acc_u:.4f}", flush=True)

for name, (cfg, detach) in rows.items():
    P.pgf2m = detached_pgf2m if detach else real_pgf2m
    import bevdistill.pipeline
    t0 = time.time()
    store, recs = P.train(cfg, tr, ev)
    print(f"{name}: {time.time()-t0:.0f}s final={recs[-1]['student_miou']:.4f}",
          flush=True)
    analyze(store, cfg, name)
