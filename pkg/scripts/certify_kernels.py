"""Additivity residuals and Cauchy-linearity deviations for the built-in kernels.

    python3 scripts/certify_kernels.py [--beta 1.0]
"""

import argparse

from solowline.characterization import cauchy_linearity_check, certify_kernel
from solowline.errors import DomainError
from solowline.kernels import BUILTIN_KERNELS, KernelFunction


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--beta", type=float, default=1.0, help="scale of the exponential kernel")
    args = ap.parse_args(argv)

    print(f"{'kernel':<18}{'verdict':<24}{'max residual':>14}  {'worst (a, b)':<18}{'cauchy dev':>12}")
    for name, make in BUILTIN_KERNELS.items():
        kernel = KernelFunction.exponential(args.beta) if name == "exponential" else make()
        rep = certify_kernel(kernel)
        try:
            cauchy = f"{cauchy_linearity_check(kernel):.3e}"
        except DomainError:
            cauchy = "n/a"
        worst = "" if rep.worst_probe is None else "({:.2f}, {:.2f})".format(*rep.worst_probe)
        print(f"{name:<18}{rep.verdict:<24}{rep.max_residual:>14.3e}  {worst:<18}{cauchy:>12}")


if __name__ == "__main__":
    main()
