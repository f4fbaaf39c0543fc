"""Fraction formatting utilities."""

from fractions import Fraction
from typing import Dict, Union

Number = Union[Fraction, float, int]


def format_fraction(value: Number) -> str:
    """Render an exact value as "num/den" (integers keep a denominator of 1)"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def fraction_record(value: Number) -> Dict[str, Union[str, float]]:
    """Both serializations of an exact value; consumers pick one"""
    return {"fraction": format_fraction(value), "decimal": float(value)}


def parse_fraction(value: str) -> Fraction:
    """Parse "3/4" or "0.75" back into a Fraction."""
    if not value:
        raise ValueError("Empty value")

    value = value.strip().replace(" ", "")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Could not parse fraction: {value}") from e
