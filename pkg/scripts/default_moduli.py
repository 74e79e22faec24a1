"""Print the table of default primitive moduli used by tcw.gf."""

from tcw.gf import find_default_modulus

PAIRS = [(3, m) for m in range(2, 14)] + [(5, m) for m in range(2, 7)]

if __name__ == "__main__":
    for q, m in PAIRS:
        f = find_default_modulus(q, m)
        print(f"    ({q}, {m}): {tuple(f.coeffs)},  # {f}")
