from dataclasses import dataclass

from sympy import QQ

from .base import Field


@dataclass(frozen=True)
class Rationals(Field):
    """
    The rational numbers with exact fraction arithmetic. This is the default
    field everywhere.
    """
    @property
    def name(self):
        return 'Q'

    @property
    def domain(self):
        return QQ

    @property
    def characteristic(self):
        return 0
