"""Sweep every bipartition of GHZ, uniformly entangled, and block states.

GHZ's external correlation is 2 ln2 no matter where the register is cut or
how many qubits land on each side; the other two maximal states depend
strongly on the cut.
"""

import math

from qcorr import parse_state_spec, sweep

LN2 = math.log(2)


def summarize(spec_text):
    report = sweep(parse_state_spec(spec_text))
    externals = sorted({round(e.external / LN2, 6) for e in report.entries})
    print(f"{spec_text:<14} {len(report.entries):>4} cuts   "
          f"external values (x ln2): {externals}")
    return report


def main():
    print("External correlation across ALL canonical bipartitions:\n")
    for n in (4, 6, 8, 10):
        summarize(f"ghz:{n}")

    print("\nCompare with the other maximally correlated families at 6 qubits:")
    summarize("ue:6")
    summarize("ghzblocks:3")

    print("\nFor ghz:* the set collapses to {2.0}: the cut does not matter.")
    print("For ue:6 the matched 3|3 cut reaches 6 ln2 while lopsided cuts")
    print("see less; for ghzblocks:3 the block cut sees no external")
    print("correlation at all.")


if __name__ == "__main__":
    main()
