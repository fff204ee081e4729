"""Closed-form logical rates of the shipped codes.

Polynomials in u = f_u (unnoticed flip probability of a physical qubit that was not lost)
and a = f_n (loss probability). The Steane rates are checked against exhaustive decoding in
tests/test_codes.py; the Golay rate is half the block error probability of its decoder.
"""
from typing import Callable, Dict

from graphrepeater.utilities import constraints
from graphrepeater.utilities.utils import LogicalRates

STEANE_N_MAX = tuple(range(8))


def _steane_fbar_0(u:float, a:float) -> float:
    m = a - 1
    return m**7 * u**2 * (48*u**5 - 168*u**4 + 252*u**3 - 210*u**2 + 98*u - 21)

def _steane_fbar_1(u:float, a:float) -> float:
    m = a - 1
    return m**6 * u * (48*m*u**6 - 168*m*u**5 + 252*m*u**4 - 210*m*u**3
                       + 14*(9*a - 7)*u**2 + 21*(1 - 3*a)*u + 21*a)

def _steane_fbar_2(u:float, a:float) -> float:
    m = a - 1
    return m**5 * u * (48*m**2*u**6 - 168*m**2*u**5 + 252*m**2*u**4 - 210*m**2*u**3
                       + 14*(a*(3*a - 16) + 7)*u**2 + 21*(a*(3*a + 4) - 1)*u - 21*a*(2*a + 1))

def _steane_fbar_3(u:float, a:float) -> float:
    m = a - 1
    return 0.5 * m**4 * (
        a**3 * (96*u**7 - 336*u**6 + 504*u**5 - 420*u**4 + 308*u**3 - 210*u**2 + 84*u + 7)
        - 2*a**2*u * (144*u**6 - 504*u**5 + 756*u**4 - 630*u**3 + 266*u**2 - 21*u - 21)
        + 2*a*u * (144*u**6 - 504*u**5 + 756*u**4 - 630*u**3 + 322*u**2 - 105*u + 21)
        + 2*u**2 * (-48*u**5 + 168*u**4 - 252*u**3 + 210*u**2 - 98*u + 21)
    )

def _steane_fbar_4(u:float, a:float) -> float:
    m = a - 1
    return 0.5 * m**3 * (
        3*a**4 * (32*u**7 - 112*u**6 + 168*u**5 - 140*u**4 + 84*u**3 - 42*u**2 + 14*u - 7)
        - a**3 * (384*u**7 - 1344*u**6 + 2016*u**5 - 1680*u**4 + 840*u**3 - 252*u**2 + 42*u + 7)
        + 12*a**2*u**2 * (48*u**5 - 168*u**4 + 252*u**3 - 210*u**2 + 98*u - 21)
        - 6*a*u * (64*u**6 - 224*u**5 + 336*u**4 - 280*u**3 + 140*u**2 - 42*u + 7)
        + 2*u**2 * (48*u**5 - 168*u**4 + 252*u**3 - 210*u**2 + 98*u - 21)
    )

def _steane_fbar_5(u:float, a:float) -> float:
    m = a - 1
    return 0.5 * m**2 * (
        6*a**5*u * (16*u**6 - 56*u**5 + 84*u**4 - 70*u**3 + 42*u**2 - 21*u + 7)
        - 2*a**4 * (240*u**7 - 840*u**6 + 1260*u**5 - 1050*u**4 + 546*u**3 - 189*u**2 + 42*u - 7)
        + a**3 * (960*u**7 - 3360*u**6 + 5040*u**5 - 4200*u**4 + 2016*u**3 - 504*u**2 + 42*u + 7)
        - 6*a**2*u * (160*u**6 - 560*u**5 + 840*u**4 - 700*u**3 + 336*u**2 - 84*u + 7)
        + 2*a*u * (240*u**6 - 840*u**5 + 1260*u**4 - 1050*u**3 + 518*u**2 - 147*u + 21)
        + 2*u**2 * (-48*u**5 + 168*u**4 - 252*u**3 + 210*u**2 - 98*u + 21)
    )

def _steane_tail(u:float, a:float) -> float:
    # shared by n_max = 6 and 7
    v3 = (2*u - 1)**3
    cubic = 2*u**3 - 4*u**2 + 3*u - 1
    return (-10.5*a**6*v3 * (4*u**4 - 8*u**3 + 6*u**2 - 2*u + 1)
            + 10.5*a**5*v3 * (12*u**4 - 24*u**3 + 18*u**2 - 6*u + 1)
            - 105*a**4*u*v3 * cubic
            + 3.5*a**3*v3 * (60*u**4 - 120*u**3 + 90*u**2 - 30*u - 1)
            - 63*a**2*u*v3 * cubic
            + 21*a*u*v3 * cubic
            + u**2 * (-48*u**5 + 168*u**4 - 252*u**3 + 210*u**2 - 98*u + 21))

def _steane_fbar_6(u:float, a:float) -> float:
    return a**7 * (48*u**7 - 168*u**6 + 252*u**5 - 210*u**4 + 126*u**3 - 63*u**2 + 21*u - 3.5) + _steane_tail(u, a)

def _steane_fbar_7(u:float, a:float) -> float:
    return 3*a**7*(2*u - 1)**3 * (2*u**4 - 4*u**3 + 3*u**2 - u + 1) + _steane_tail(u, a)

STEANE_FBAR: Dict[int, Callable[[float, float], float]] = {
    0: _steane_fbar_0,
    1: _steane_fbar_1,
    2: _steane_fbar_2,
    3: _steane_fbar_3,
    4: _steane_fbar_4,
    5: _steane_fbar_5,
    6: _steane_fbar_6,
    7: _steane_fbar_7,
}

STEANE_SUCCESS: Dict[int, Callable[[float], float]] = {
    0: lambda a: (1 - a)**7,
    1: lambda a: (a - 1)**6 * (6*a + 1),
    2: lambda a: -(a - 1)**5 * (15*a**2 + 5*a + 1),
    3: lambda a: (a - 1)**4 * (20*a**3 + 10*a**2 + 4*a + 1),
    4: lambda a: -15*a**7 + 35*a**6 - 21*a**5 + 1,
    5: lambda a: 6*a**7 - 7*a**6 + 1,
    6: lambda a: 1 - a**7,
    7: lambda a: 1.0,
}


def steane_table_rates(f_u:float, f_n:float, n_max:int) -> LogicalRates:
    """Logical flip rate and success probability of the Steane code aborting above n_max losses"""
    if n_max not in STEANE_FBAR:
        raise ValueError(f'n_max must be one of {STEANE_N_MAX}, got {n_max}')
    u = constraints.validate_probability(f_u, 'f_u')
    a = constraints.validate_probability(f_n, 'f_n')
    return LogicalRates(fbar_u=float(STEANE_FBAR[n_max](u, a)), p_succ=float(STEANE_SUCCESS[n_max](a)))


def _golay_block_error(a:float, u:float) -> float:
    s = a + u - 1
    m = a - 1
    t = (-a**23/4096 + 23*s*a**22/2048 - 253*s**2*a**21/1024 + 1771/512*s**3*a**20
         - 8855/256*s**4*a**19)
    t += (33649/128*s**5*a**18 - 100947/64*s**6*a**17 + 245157/32*s**7*a**16
          - 30613*s**8*a**15)
    t += -253/16*m*s**7*a**15 + 101200*s**9*a**14
    t += 3795/8*m*s**8*a**14 - 272734*s**10*a**13 - 26565/4*m*s**9*a**13
    t += 560924*s**11*a**12 + 115115/2*m*s**10*a**12 - 695520*s**12*a**11
    t += -319424*m*s**11*a**11 + 8855/2*s**11*(-a + 2*u + 1)*a**11
    t += 949256*m*s**12*a**10 - 97405*s**12*(-a + 2*u + 1)*a**10
    t += 779240*s**13*(-a + 2*u + 1)*a**9 + 18975*s**13*(-a + 6*u + 1)*a**9
    t += -485760*s**14*(-a + 6*u + 1)*a**8 - 2277*s**14*(-a + 14*u + 1)*a**8
    t += 32384*s**15*(-a + 14*u + 1)*a**7 + 253/2*m*s**14*(-a + 14*u + 1)*a**7
    t += 212520*s**14*(-m**2 + 10*u*m + 8*u**2)*a**7
    t += -100947*m*s**15*(-a + 14*u + 1)*a**6
    t += -28336*s**16*(-a + 2*u + 1)*(-a + 14*u + 1)*a**5
    t += -5313*s**16*(m**2 - 15*u*m + 30*u**2)*a**5
    t += 8855*s**17*(m**2 - 17*u*m + 90*u**2)*a**4
    t += -1771*s**17*(m**3 - 17*u*m**2 + 138*u**2*m + 96*u**3)*a**3
    t += -253*s**18*(-m**3 + 18*u*m**2 - 171*u**2*m + 90*u**3)*a**2
    t += 23*s**19*(-m**3 + 19*u*m**2 - 190*u**2*m + 560*u**3)*a + s**23
    t += -23*u*s**22 + 253*u**2*s**21 - 1771*u**3*s**20 + 1
    return t

def golay_table_rates(f_u:float, f_n:float) -> LogicalRates:
    """Golay code logical flip rate, half its block error probability; it never aborts"""
    u = constraints.validate_probability(f_u, 'f_u')
    a = constraints.validate_probability(f_n, 'f_n')
    return LogicalRates(fbar_u=float(_golay_block_error(a, u) / 2), p_succ=1.0)

def unencoded_rates(f_u:float, f_n:float) -> LogicalRates:
    """One physical qubit per logical qubit: a loss is fatal"""
    u = constraints.validate_probability(f_u, 'f_u')
    a = constraints.validate_probability(f_n, 'f_n')
    return LogicalRates(fbar_u=u, p_succ=1.0 - a)
