"""Factor a few integer matrices into alternating elementary words.

Run: python3 demos/01_factor_tour.py
"""

from sl2factor import (
    Mat2,
    Word,
    factor_euclid,
    identity,
    make_ring,
    vk_membership,
    word_to_matrix,
)


def show(A):
    word = factor_euclid(A)
    print(f"A = {A}")
    kinds = "".join("L" if i % 2 == 0 else "U" for i in range(word.k))
    print(f"  word ({kinds or 'empty'}): {[str(x) for x in word.entries]}")
    back = word_to_matrix(word, ring=A.ring)
    print(f"  re-evaluates to {back}, member={vk_membership(A, word.entries)}")
    print()


def main():
    Z = make_ring("Z")

    show(Mat2(Z.el(2), Z.el(3), Z.el(3), Z.el(5)))
    show(Mat2(Z.el(7), Z.el(30), Z.el(10), Z.el(43)))
    show(Mat2(Z.el(0), Z.el(-1), Z.el(1), Z.el(0)))
    show(-identity(Z))  # -I needs five letters, none of them zero

    # entries far apart: the balanced quotient keeps intermediate
    # values from blowing up
    A = word_to_matrix(Word("lower", tuple(Z.el(v) for v in
                                           (13, -7, 19, 4, -11))))
    show(A)


if __name__ == "__main__":
    main()
