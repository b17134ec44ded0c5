#!/usr/bin/env python3
"""Growth oscillation report.

Prints the weight growth function against c * x^(log_lambda 2) along the
two witness sequences x_n = lambda^n and y_n = lambda^n + lambda^(n-2),
showing that the normalised ratio oscillates (no limit exists), plus the
empirical enveloping-algebra exponent against theta ~ 0.5902.
"""

from __future__ import annotations

import argparse
import math

from fiblie.grading import count_weights_at_most, lambda_power, weight_growth_levels
from fiblie.series import THETA, enveloping_growth_report

LAMBDA = (1 + 5**0.5) / 2
THETA_PRIME = math.log(2) / math.log(LAMBDA)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=18)
    parser.add_argument("--envelope-degree", type=int, default=200)
    args = parser.parse_args()

    print("n   gamma(lambda^n)/x^c   gamma(y_n)/y^c      (c = log_lambda 2)")
    for n in range(5, args.max_n + 1):
        x = lambda_power(n)
        gx = count_weights_at_most(weight_growth_levels(x), x)
        y = lambda_power(n) + lambda_power(n - 2)
        gy = count_weights_at_most(weight_growth_levels(y), y)
        rx = gx / float(x) ** THETA_PRIME
        ry = gy / float(y) ** THETA_PRIME
        print(f"{n:2d}  {rx:18.6f}   {ry:16.6f}")
    print()
    report = enveloping_growth_report(args.envelope_degree)
    print(f"enveloping growth: theta target {THETA:.4f}")
    for n, theta_hat in report.theta_hat:
        print(f"  degree {n:4d}: theta_hat = {theta_hat:.4f}")
    print(
        f"PBW witness: gamma_U({report.witness_degree}) = {report.witness_count} "
        f">= {report.witness_lower_bound}"
    )


if __name__ == "__main__":
    main()
