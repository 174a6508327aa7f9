"""Desk-scale benchmark: collect, train and evaluate the full pipeline and its ablations.

Writes the heavy artifacts to ``<out>`` (default ``runs/desk``) and a small
summary with success rates and per-stage wall times to
``benchmarks/results/desk_summary.json``.

    python benchmarks/desk_run.py [--config src/zoomaff/configs/desk.json] [--out runs/desk]
"""
import argparse
import json
import logging
import time
from pathlib import Path

from zoomaff import config as C
from zoomaff.bench import overall, write_table
from zoomaff.pipeline import generate_data, run_eval, train_stage

ROOT = Path(__file__).resolve().parent.parent
DEFAULT_CONFIG = ROOT / "src" / "zoomaff" / "configs" / "desk.json"
SUMMARY = ROOT / "benchmarks" / "results" / "desk_summary.json"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--config", default=str(DEFAULT_CONFIG))
    ap.add_argument("--set", action="append", default=[])
    ap.add_argument("--out", default=str(ROOT / "runs" / "desk"))
    ap.add_argument("--summary", default=str(SUMMARY))
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    cfg = C.load_config(args.config, args.set)
    out = Path(args.out)
    data, run = out / "data", out / "run"
    timing = {}

    def timed(name, fn, *a, **kw):
        t = time.perf_counter()
        res = fn(*a, **kw)
        timing[name] = round(time.perf_counter() - t, 1)
        logging.info("%s done in %.0fs", name, timing[name])
        return res

    def progress(task, rnd, v, recs):
        if v % 500 == 0:
            logging.info("%s round %d view %d: %d records, %d positive", task, rnd, v, len(recs),
                         sum(r.gt for r in recs))

    stats = timed("collect", generate_data, cfg, data, progress=progress)
    timed("train_cross_stage1", train_stage, cfg, data, run, "coarse_fine", "cross")
    timed("train_cross_actor", train_stage, cfg, data, run, "actor", "cross")
    timed("train_separate_stage1", train_stage, cfg, data, run, "coarse_fine", "separate", tasks=["pull_open"])
    timed("train_separate_actor", train_stage, cfg, data, run, "actor", "separate", tasks=["pull_open"])
    rows = timed("eval_pull", run_eval, cfg, run, ["final", "separate", "random_fine", "random_coarse"],
                 tasks=["pull_open"], min_n=200)
    rows += timed("eval_push", run_eval, cfg, run, ["final"], tasks=["push_close"], min_n=200)
    write_table(rows, out / "eval")
    summary = {
        "config_hash": C.config_hash(cfg),
        "n_per_cell": cfg["bench"]["n_per_cell"],
        "dataset": stats,
        "rows": rows,
        "overall": {f"{m}/{t}": overall(rows, m, t) for m in ("final", "separate", "random_fine", "random_coarse")
                    for t in ("pull_open", "push_close") if any(r["mode"] == m and r["task"] == t for r in rows)},
        "timing_s": timing,
        "total_s": round(sum(timing.values()), 1),
    }
    Path(args.summary).parent.mkdir(parents=True, exist_ok=True)
    Path(args.summary).write_text(json.dumps(summary, indent=1, sort_keys=True))
    print(json.dumps(summary["overall"], indent=1), summary["total_s"])


if __name__ == "__main__":
    main()
