import numpy as np

EVEN_MODULI = (5, 13, 17, 29)
ODD_MODULI = (7, 11, 19, 23)


def squares_symbol(n, p):
    """Legendre symbol of a prime p from its table of squares"""
    if n % p == 0:
        return 0
    return 1 if n % p in {x * x % p for x in range(1, p)} else -1


def float_close(a, b, tol=1e-8):
    return abs(complex(a) - complex(b)) <= tol * max(1.0, abs(complex(b)))


def float_character_sum(chi, term):
    """sum over 0 < n < k/2 of chi(n) * term(pi n / k) in doubles"""
    k = chi.modulus
    return sum(chi(n) * term(n * np.pi / k) for n in range(1, (k + 1) // 2))
