import re

from ..exceptions import FieldError
from .base import Field
from .prime import PrimeField
from .rational import Rationals

__all__ = ['Field', 'PrimeField', 'Rationals', 'parse_field']

_PRIME_RE = re.compile(r'^(?:p:|fp\(|gf\()?\s*(\d+)\s*\)?$')


def parse_field(text):
    """
    Parse a field description.

    Accepts ``q``/``Q``/``qq`` for the rationals and ``p:7``, ``Fp(7)`` or
    ``GF(7)`` for prime fields. A :class:`Field` instance is returned as is.

    Raises:
        FieldError: the text names neither form or the modulus is not prime
    """
    if isinstance(text, Field):
        return text

    cleaned = str(text).strip().lower()
    if cleaned in ('q', 'qq', 'rationals'):
        return Rationals()

    match = _PRIME_RE.match(cleaned)
    if not match:
        raise FieldError('Unknown field {!r}; use q or p:PRIME'.format(text))
    return PrimeField(int(match.group(1)))
