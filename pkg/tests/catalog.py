"""Type lists shared by the sweeps."""

from coxsupport.coxeter.types import parse_label

SWEEP = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "H3", "H4", "G2"]
    + [f"I2({p})" for p in range(5, 13) if p != 6]
)

SMALL = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "G2", "H3", "F4"] + [f"I2({p})" for p in (5, 7, 8, 9, 10, 12)]

TWO_CLASS = ["B2", "B3", "B4", "F4", "G2", "I2(4)", "I2(8)", "I2(10)", "I2(12)"]


def L(name):
    return parse_label(name)
