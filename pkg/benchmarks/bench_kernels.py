"""Compiled (Cython) vs pure-NumPy geometry kernels: wall time per call.

    python benchmarks/bench_kernels.py [--repeat 5] [--out benchmarks/results/kernels.json]

Sizes match the desk configuration (512-point clouds, 64-point groups, a
120x160 depth image against a few hundred triangles).
"""
import argparse
import json
import timeit
from pathlib import Path

import numpy as np

from zoomaff import _kernels_py, kernels
from zoomaff.scene import default_spec, generate_scene

try:
    from zoomaff import _kernels as _cy
except ImportError:
    _cy = None


def cases(rng):
    pts = rng.uniform(-0.5, 0.5, (2048, 3))
    cloud = pts[:512]
    cent = kernels.farthest_point_sample(cloud, 128)
    scene = generate_scene(default_spec("door"), 0)
    tris = scene.triangles()
    origins = np.tile([[0.0, 1.5, 0.4]], (120 * 160, 1))
    dirs = rng.normal([0.0, -1.0, 0.0], 0.3, (120 * 160, 3))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    query = rng.uniform(-0.5, 0.5, (512, 3))
    return {
        "farthest_point_sample 2048->512": lambda impl: kernels.farthest_point_sample(pts, 512, impl=impl),
        "ball_query 512x128 k=32": lambda impl: kernels.ball_query(cloud, cloud[cent], 0.1, 32, self_idx=cent,
                                                                     impl=impl),
        "three_nn 512<-128": lambda impl: kernels.three_nn(cloud, cloud[cent], impl=impl),
        f"raycast 19200 rays x {len(tris)} tris": lambda impl: kernels.raycast(origins, dirs, tris, impl=impl),
        f"point_triangle_distance 512 x {len(tris)} tris": lambda impl: kernels.point_triangle_distance(
            query, tris, impl=impl),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--out", default=str(Path(__file__).parent / "results" / "kernels.json"))
    args = ap.parse_args(argv)
    if _cy is None:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    rows = []
    for name, fn in cases(np.random.default_rng(0)).items():
        t = {}
        for label, impl in (("numpy", _kernels_py), ("cython", _cy)):
            fn(impl)  # warm-up
            t[label] = min(timeit.repeat(lambda: fn(impl), number=1, repeat=args.repeat))
        rows.append({"kernel": name, "numpy_ms": round(t["numpy"] * 1e3, 3), "cython_ms": round(t["cython"] * 1e3, 3),
                     "speedup": round(t["numpy"] / t["cython"], 1)})
        print(f"{name:45s} numpy {t['numpy'] * 1e3:9.2f} ms   cython {t['cython'] * 1e3:8.2f} ms   "
              f"x{t['numpy'] / t['cython']:.1f}")
    Path(args.out).parent.mkdir(parents=True, exist_ok=True)
    Path(args.out).write_text(json.dumps(rows, indent=1))


if __name__ == "__main__":
    main()
