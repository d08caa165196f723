from dataclasses import dataclass

from sympy import GF, isprime

from ..exceptions import FieldError
from .base import Field


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isprime(self.p):
            raise FieldError('Prime field modulus must be prime, got {}'.format(
                self.p))

    @property
    def name(self):
        return 'Fp({})'.format(self.p)

    @property
    def domain(self):
        return GF(self.p)

    @property
    def characteristic(self):
        return self.p
