# Distillation warm-up probe: FD/LD enabled only after the teacher stabilizes.
import pickle, time
from dataclasses import replace
import numpy as np
import bevdistill.pipeline as P
from bevdistill import engine as E
from bevdistill.engine import ParamStore, Adam
from bevdistill.cam_enc import build_frustum


def train_warm(cfg, warm_cfg, warm_from, train_ds, eval_ds):
    cfg.validate()
    bev_spec = train_ds.bev_spec
    cam_idx = P.camera_subset(train_ds, cfg.n_cameras)
    store = ParamStore(cfg.seed)
    P.build_models(store, cfg, bev_spec.num_classes)
    frustum = None
    if cfg.n_cameras > 0:
        frustum = build_frustum(replace(train_ds.cam_spec, n_cameras=cfg.n_cameras),
                                bev_spec, cfg.d_min, cfg.d_max, cfg.n_depth)
    opt = Adam(store, lr=cfg.lr, weight_decay=cfg.weight_decay)
    rng = np.random.default_rng(cfg.seed)
    records = []
    for epoch in range(1, cfg.epochs + 1):
        ecfg = cfg if epoch >= warm_from else warm_cfg
        if epoch == cfg.decay_epoch:
            opt.lr *= cfg.lr_decay_factor
        order = rng.permutation(len(train_ds.samples))
        sums, n_steps = {}, 0
        for lo in range(0, len(order), cfg.batch_size):
            batch = [train_ds.samples[i] for i in order[lo:lo + cfg.batch_size]]
            E.reset_tape()
            for p in store.params.values():
                p.zero_grad()
            total, bundle = P._batch_losses(batch, store, ecfg, bev_spec,
                                            frustum, cam_idx)
            E.backward(total)
            opt.step()
            for key, val in vars(bundle).items():
                sums[key] = sums.get(key, 0.0) + val
            n_steps += 1
        rec = {"epoch": epoch}
        rec.update({k: v / n_steps for k, v in sums.items()})
        rec["student_miou"], rec["teacher_miou"] = P._eval_miou(
            eval_ds, store, cfg, frustum, cam_idx)
        records.append(rec)
    return store, records


tr, ev = pickle.load(open("/root/pkg/.calib/ds_ref.pkl", "rb"))
base = dict(epochs=12, batch_size=8, n_cameras=2, lr=5e-3, seed=1)
off = P.TrainConfig(use_fd=False, use_ld=False, **base)
rows = {
    "warm_full": (P.TrainConfig(**base), off, 5),
    "warm_fd": (P.TrainConfig(use_fd=True, use_ld=False, **base), off, 5),
    "warm_ld": (P.TrainConfig(use_fd=False, use_ld=True, **base), off, 5),
}
for name, (cfg, wcfg, warm_from) in rows.items():
    t0 = time.time()
    store, recs = train_warm(cfg, wcfg, warm_from, tr, ev)
    print(f"{name}: {time.time()-t0:.0f}s", flush=True)
    print("  student:", [round(r['student_miou'], 4) for r in recs], flush=True)
    print("  teacher:", [round(r['teacher_miou'], 4) for r in recs], flush=True)
    print("  l_feature:", [round(r.get('l_feature', 0.0), 3) for r in recs], flush=True)

# Generalization-gap check: baseline train-subset vs eval mIoU.
import bevdistill.pipeline as PP
from bevdistill.pipeline import Dataset
cfg = P.TrainConfig(use_pgf2m=False, use_fd=False, use_ld=False,
                    n_cameras=0, **{k: v for k, v in base.items() if k != 'n_cameras'})
store, recs = P.train(cfg, tr, ev)
tr_sub = Dataset(samples=tr.samples[:50], bev_spec=tr.bev_spec, cam_spec=tr.cam_spec)
s_tr, _ = P._eval_miou(tr_sub, store, cfg, None, [])
print(f"baseline gap: train50={s_tr:.4f} eval={recs[-1]['student_miou']:.4f}", flush=True)
