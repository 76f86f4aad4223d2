"""
Fixed-precision real arithmetic helpers built on `gmpy2`.

Holds the package's numeric policy (default and minimum working precision,
the separation threshold used to trust a sort order) together with parsing of
real parameters given as decimal strings, named constants, or small arithmetic
expressions over them.
"""

from __future__ import annotations

import ast
import logging
import operator
from contextlib import contextmanager
from typing import TYPE_CHECKING, Final

import gmpy2
from gmpy2 import mpfr

from sequence_graphs.errors import InvalidParam

if TYPE_CHECKING:
    from collections.abc import Callable, Generator

module_logger = logging.getLogger(__name__)

DEFAULT_PRECISION_BITS: Final = 128
MIN_PRECISION_BITS: Final = 64


def required_precision(n: int, requested: int = DEFAULT_PRECISION_BITS) -> int:
    """Working precision needed to sort the first `n` terms reliably.

    Parameters
    ----------
    n : int
        Number of terms that will be compared.
    requested : int, default=DEFAULT_PRECISION_BITS
        The precision asked for by the caller.

    Returns
    -------
    int
        ``max(requested, 64 + 2*ceil(log2 n))``.

    Raises
    ------
    InvalidParam
        If `requested` is below `MIN_PRECISION_BITS`.
    """
    if requested < MIN_PRECISION_BITS:
        msg = (
            f"Precision of {requested} bits requested, "
            f"at least {MIN_PRECISION_BITS} are required."
        )
        raise InvalidParam(msg)
    ceil_log2 = (max(n, 1) - 1).bit_length()
    return max(requested, MIN_PRECISION_BITS + 2 * ceil_log2)


@contextmanager
def working_precision(precision_bits: int) -> Generator[None, None, None]:
    """Run the enclosed `gmpy2` arithmetic at `precision_bits` bits."""
    with gmpy2.local_context(gmpy2.get_context(), precision=precision_bits):
        yield


def separation_threshold(precision_bits: int) -> mpfr:
    """Smallest gap ``2^(-p/2)`` between terms for which their order is trusted."""
    with working_precision(precision_bits):
        return mpfr(2) ** -(precision_bits // 2)


def _golden() -> mpfr:
    return (1 + gmpy2.sqrt(5)) / 2


def _sqrt2() -> mpfr:
    return gmpy2.sqrt(2)


def _pi() -> mpfr:
    return gmpy2.const_pi()


NAMED_CONSTANTS: Final[dict[str, Callable[[], mpfr]]] = {
    "golden": _golden,
    "phi": _golden,
    "sqrt2": _sqrt2,
    "pi": _pi,
}

_FUNCTIONS: Final[dict[str, Callable[[mpfr], mpfr]]] = {
    "sqrt": gmpy2.sqrt,
}

_BINARY_OPS: Final = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}

_UNARY_OPS: Final = {
    ast.USub: operator.neg,
    ast.UAdd: operator.pos,
}


def named_constant(name: str, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpfr:
    """Evaluate a named constant (``golden``, ``sqrt2``, ``pi``) at the given
    precision.

    Raises
    ------
    InvalidParam
        If the name is unknown.
    """
    try:
        factory = NAMED_CONSTANTS[name.strip().lower()]
    except KeyError:
        known = ", ".join(sorted(NAMED_CONSTANTS))
        msg = f"Unknown constant {name!r}; known constants are {known}."
        raise InvalidParam(msg) from None
    with working_precision(precision_bits):
        return factory()


class _ExpressionEvaluator:
    """Restricted evaluator for arithmetic over decimals and named constants."""

    def __init__(self, source: str) -> None:
        self._source = source.strip()

    def evaluate(self) -> mpfr:
        try:
            tree = ast.parse(self._source, mode="eval")
        except SyntaxError as e:
            msg = f"Could not parse real expression {self._source!r}."
            raise InvalidParam(msg) from e
        return self._visit(tree.body)

    def _visit(self, node: ast.expr) -> mpfr:
        match node:
            case ast.Constant(value=int() | float() as value) if not isinstance(
                value, bool
            ):
                # Re-read the literal from the source so decimals are not
                # routed through a binary float.
                literal = ast.get_source_segment(self._source, node)
                return mpfr(literal or repr(value))
            case ast.Name(id=name) if name.lower() in NAMED_CONSTANTS:
                return NAMED_CONSTANTS[name.lower()]()
            case ast.BinOp(left=left, op=op, right=right) if type(op) in _BINARY_OPS:
                return _BINARY_OPS[type(op)](self._visit(left), self._visit(right))
            case ast.UnaryOp(op=op, operand=operand) if type(op) in _UNARY_OPS:
                return _UNARY_OPS[type(op)](self._visit(operand))
            case ast.Call(func=ast.Name(id=name), args=[arg], keywords=[]) if (
                name in _FUNCTIONS
            ):
                return _FUNCTIONS[name](self._visit(arg))
        msg = (
            f"Unsupported element {ast.dump(node)} "
            f"in real expression {self._source!r}."
        )
        raise InvalidParam(msg)


def parse_real(text: str, precision_bits: int = DEFAULT_PRECISION_BITS) -> mpfr:
    """Parse a real number given as a decimal string, a named constant, or an
    arithmetic expression over both.

    Parameters
    ----------
    text : str
        For example ``"1.6180339887"``, ``"golden"`` or ``"1/(2*pi)"``.
    precision_bits : int, default=DEFAULT_PRECISION_BITS
        Working precision of the evaluation.

    Returns
    -------
    mpfr
        The value rounded to `precision_bits` bits.

    Raises
    ------
    InvalidParam
        If the text is not a supported expression.
    """
    with working_precision(precision_bits):
        value = _ExpressionEvaluator(text).evaluate()
    module_logger.debug("Parsed %r at %d bits", text, precision_bits)
    return value


def to_mpfr(value: mpfr | int | str, precision_bits: int) -> mpfr:
    """Coerce `value` to an `mpfr` at `precision_bits` bits."""
    if isinstance(value, str):
        return parse_real(value, precision_bits)
    with working_precision(precision_bits):
        return mpfr(value)
