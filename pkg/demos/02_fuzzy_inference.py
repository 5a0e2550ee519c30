"""Walk through the Mamdani inference that backs uncertain answers.

The crisp input is (R - d) / (R - r): how close the pair distance d sits
to the definite-yes radius r, on a 0..1 scale. Two rules fire with min
activation, accumulate with max, and the center of gravity of the result
is the likelihood.
"""

import numpy as np

from fuzzmap import default_fcl_text, default_system, evaluate, parse_fcl, to_fcl


def main():
    sys = default_system()
    print("built-in system:")
    print(f"  input terms : {', '.join(sys.input_terms)}")
    print(f"  output terms: {', '.join(sys.output_terms)}")
    for i, rule in enumerate(sys.rules, 1):
        print(f"  rule {i}: IF closeness IS {rule.antecedent} "
              f"THEN likelihood IS {rule.consequent}")

    print("\nlikelihood across the crisp input range:")
    for x in np.linspace(0.0, 1.0, 11):
        bar = "#" * int(round(evaluate(sys, float(x)) * 40))
        print(f"  x={x:4.1f}  likelihood={evaluate(sys, float(x)):.4f}  {bar}")
    print("  (0.5 is the fixed point; above it leans 'adjacent')")

    print("\nthe same system round-trips through FCL text:")
    again = parse_fcl(to_fcl(sys))
    worst = max(abs(evaluate(sys, x) - evaluate(again, x))
                for x in np.linspace(0, 1, 101))
    print(f"  max evaluation difference after round trip: {worst:.2e}")

    print("\nshipped default.fcl (excerpt):")
    for line in default_fcl_text().splitlines()[4:14]:
        print(f"  {line}")


if __name__ == "__main__":
    main()
