"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 20]

Prints one row per kernel with the median time of each backend and the
speedup, plus the largest difference between the two outputs.
"""

import argparse
import timeit

import numpy as np

from fpionn.kernels import available_backends, get_backend
from fpionn.tensor import make_rng, uniform


def cases(rng):
    x = rng.uniform(0, 1, size=(64, 8, 28, 28))
    cols = uniform(rng, (64, 26, 26, 8, 3, 3), -1, 1)
    act = rng.normal(size=(64, 8, 676))
    z = uniform(rng, (64, 8, 676), -1, 1, complex_=True)
    g = uniform(rng, z.shape, -1, 1, complex_=True)
    bias = rng.uniform(-1, 1, size=8)
    return {
        "im2col 64x8x28x28 k3": lambda m: m.im2col(x, 3, 1),
        "col2im 64x8x28x28 k3": lambda m: m.col2im(cols, 28, 28, 1),
        "lorentzian": lambda m: m.lorentzian(act, bias, 0.5),
        "lorentzian_backward": lambda m: m.lorentzian_backward(act, bias, 0.5, act),
        "coherent": lambda m: m.coherent(z, bias, 2.0),
        "coherent_backward": lambda m: m.coherent_backward(z, bias, 2.0, g),
    }


def flat(out):
    return np.concatenate([np.ravel(o) for o in out]) if isinstance(out, tuple) else np.ravel(out)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()
    if "compiled" not in available_backends():
        raise SystemExit("compiled extension not built; run `pip install -e .` first")
    compiled, fallback = get_backend("compiled"), get_backend("numpy")
    print(f"{'kernel':<24}{'compiled ms':>13}{'numpy ms':>11}{'speedup':>9}{'max diff':>11}")
    for name, fn in cases(make_rng(0)).items():
        times = {}
        for label, mod in (("compiled", compiled), ("numpy", fallback)):
            fn(mod)  # warm up
            times[label] = np.median(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        diff = float(np.abs(flat(fn(compiled)) - flat(fn(fallback))).max())
        print(f"{name:<24}{1e3 * times['compiled']:>13.2f}{1e3 * times['numpy']:>11.2f}"
              f"{times['numpy'] / times['compiled']:>8.1f}x{diff:>11.1e}")


if __name__ == "__main__":
    main()
