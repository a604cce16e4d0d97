"""Continuant polynomials and the closed form for word matrices.

Run: python3 demos/02_continuant_identities.py
"""

from sl2factor import (
    Word,
    continuant,
    make_ring,
    word_matrix_by_continuants,
    word_to_matrix,
)


def main():
    Z = make_ring("Z")

    ones = [tuple(Z.el(1) for _ in range(n)) for n in range(10)]
    print("K_n at all ones (the Fibonacci numbers):")
    print("  " + ", ".join(str(continuant(Z, xs)) for xs in ones))
    print()

    xs = tuple(Z.el(v) for v in (2, -1, 3, 5))
    rev = xs[::-1]
    print(f"reversal symmetry: K{tuple(x.a for x in xs)} = "
          f"{continuant(Z, xs)} = K{tuple(x.a for x in rev)} = "
          f"{continuant(Z, rev)}")
    print()

    print("the four continuants assemble the word matrix:")
    M = word_matrix_by_continuants(Z, xs)
    P = word_to_matrix(Word("lower", xs))
    print(f"  by continuants: {M}")
    print(f"  by product:     {P}")
    print(f"  det = {M.det()} (always exactly 1)")


if __name__ == "__main__":
    main()
