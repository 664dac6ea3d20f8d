"""The untwisted Alexander polynomial of the family is a perfect square.

Builds the genus n-1 Seifert matrix from the band intersection data and
checks det(tA - A^T) = p_n(t)^2 for a range of n, printing p_n itself.
"""

from sliceobs.seifert import alexander_polynomial, p_n, seifert_matrix


def main():
    for n in (5, 7, 11, 17, 23):
        sm = seifert_matrix(n)
        alex = alexander_polynomial(n).aligned()
        root = p_n(n)
        sq = (root * root).aligned()
        same = alex == sq or alex == sq.scale(-1)
        print(f"n={n}: Seifert matrix {sm.matrix.nrows}x{sm.matrix.nrows}, "
              f"genus {sm.genus}")
        print(f"  p_n coefficients: {[c for _, c in root.items()]}")
        print(f"  det(tA - A^T) == p_n^2 (up to units): {same}")


if __name__ == "__main__":
    main()
