from math import lcm
from typing import Any, Dict

from src.characters.dirichlet import build_real_primitive
from src.characters.gauss import gauss_sum_exact, gauss_sum_half
from src.closedform.coefficients import class_number, g_of_chi
from src.cyclotomic.field import get_context


def character_constants(k: int) -> Dict[str, Any]:
    """
    Modulus, parity, value table and the Gauss-sum constants of the real primitive character mod k
    """
    chi = build_real_primitive(k)
    ctx = get_context(lcm(4, 2 * k))
    gauss_sum = gauss_sum_exact(1, chi, ctx)
    if (gauss_sum * gauss_sum).as_rational() != chi(-1) * k:
        raise ArithmeticError(f"G(chi)^2 is not {chi(-1) * k} for the character mod {k}")

    # G(chi) is +-sqrt(k) or +-i*sqrt(k), the sign read off the embedding
    embedded = gauss_sum.to_complex()
    negative = (embedded.real if chi.is_even else embedded.imag) < 0
    unit = '' if chi.is_even else 'i*'

    constants = {
        'modulus': k,
        'parity': chi.parity.value,
        'values': list(chi.values),
        'gauss_sum': f"{'-' if negative else ''}{unit}sqrt({k})",
        'gauss_sum_half': gauss_sum_half(chi),
        'g': g_of_chi(chi),
        'class_number': None,
    }
    if chi.is_odd and k >= 7:
        constants['class_number'] = class_number(k)
    return constants


def render_constants(constants: Dict[str, Any]) -> str:
    k = constants['modulus']
    lines = [
        f"modulus      {k}",
        f"parity       {constants['parity']}",
        f"values       {','.join(str(v) for v in constants['values'])}",
        f"G(chi)       {constants['gauss_sum']}",
        f"G(k/2,chi)   {constants['gauss_sum_half']}",
        f"g(chi)       {constants['g']}",
    ]
    if constants['class_number'] is not None:
        lines.append(f"h(-{k})       {constants['class_number']}")
    return '\n'.join(lines)
