"""Rewriting and normal forms for linear category morphisms."""

from ._lincat import (
    DillError,
    MeasureError,
    ParseError,
    Session,
    SessionError,
    TypeError,
    simulate,
    theta,
)

_default = Session()


def type_of(text):
    return _default.type(text)


def normalize(text, fuel=100000):
    return _default.normalize(text, fuel)


def equal(a, b):
    return _default.equal(a, b)


__all__ = [
    "DillError",
    "MeasureError",
    "ParseError",
    "Session",
    "SessionError",
    "TypeError",
    "equal",
    "normalize",
    "simulate",
    "theta",
    "type_of",
]
