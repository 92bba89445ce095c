"""Time the splatting kernels: numpy fallback vs the compiled extension.

    python3 benchmarks/bench_raster.py [--size 64] [--repeats 5]
"""

import argparse
import time

import numpy as np

from gsbridge.assets import get_asset
from gsbridge.gaussians import BindingMode, init_bindings
from gsbridge.geometry import PinholeCamera
from gsbridge.render import available_backends, render, render_backward, set_backend


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--asset", default="small_cube")
    ap.add_argument("--size", type=int, default=64)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    asset = get_asset(args.asset)
    bound = init_bindings(asset.mesh(), asset.per_face(), BindingMode.SOFT, 0, color=asset.mean_albedo())
    gs = bound.resolve_all()
    v = asset.mesh().vertices
    centre = 0.5 * (v.min(0) + v.max(0))
    r = float(np.linalg.norm(v - centre, axis=1).max())
    cam = PinholeCamera.look_at(centre + 3 * r * np.array([0.8, 0.3, 0.5]), centre,
                                fx=1.1 * args.size, width=args.size, height=args.size)
    bg = np.full(3, 0.5)
    g = np.random.default_rng(0).normal(size=(args.size, args.size, 3))

    print(f"{len(gs)} Gaussians, {args.size}x{args.size} px, best of {args.repeats}")
    results = {}
    for backend in available_backends():
        set_backend(backend)
        img = render(gs, cam, bg).rgb
        fwd = best_of(lambda: render(gs, cam, bg), args.repeats)
        bwd = best_of(lambda: render_backward(gs, cam, bg, g), args.repeats)
        results[backend] = (fwd, bwd, img)
        print(f"{backend:>7}: forward {fwd * 1e3:8.2f} ms   forward+backward {bwd * 1e3:8.2f} ms")
    if "ext" in results:
        fp, bp, ip = results["python"]
        fe, be, ie = results["ext"]
        print(f"speedup: forward x{fp / fe:.1f}, backward x{bp / be:.1f}, "
              f"max image diff {np.abs(ip - ie).max():.2e}")


if __name__ == "__main__":
    main()
