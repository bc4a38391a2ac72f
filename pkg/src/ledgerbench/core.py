"""Exact money arithmetic, calendar helpers, and company profiles.

Every monetary amount in the engine is a :class:`Money` value: an integer
count of minor units (hundredths). Addition and subtraction are exact, and
the single rounding policy lives in :func:`round_half_up` (ties away from
zero). Statement lines are sums of already-rounded transaction amounts, so
no floating-point drift can enter the books.

Quantities of goods are carried the same way, as integer hundredths of a
unit, through the small ``qty_*`` helpers.
"""

from __future__ import annotations

import datetime as _dt
import json
from dataclasses import dataclass
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Union

# Generous hard ceiling; the contract only requires +/- 10**13 minor units.
MAX_MINOR_UNITS = 10**16

Numeric = Union[int, str, float, Decimal, Fraction, "Money"]


class MoneyOverflowError(OverflowError):
    """Amount falls outside the representable fixed-point range."""


def _div_round_half_away(numerator: int, denominator: int) -> int:
    """Integer division rounding to nearest, ties away from zero."""
    if denominator < 0:
        numerator, denominator = -numerator, -denominator
    if numerator >= 0:
        return (2 * numerator + denominator) // (2 * denominator)
    return -((-2 * numerator + denominator) // (2 * denominator))


def _to_fraction(value: Numeric) -> Fraction:
    if isinstance(value, Money):
        return value.as_fraction()
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # Decimal(str(x)) keeps the literal the caller wrote (0.005 stays
        # five thousandths instead of the nearest binary float).
        return Fraction(Decimal(str(value)))
    if isinstance(value, Decimal):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(Decimal(value.strip()))
    raise TypeError(f"cannot interpret {type(value).__name__} as an amount")


class Money:
    """Fixed-point currency amount with exactly two fractional digits."""

    __slots__ = ("cents",)

    def __init__(self, cents: int):
        if not isinstance(cents, int):
            raise TypeError("Money is constructed from integer minor units")
        if abs(cents) > MAX_MINOR_UNITS:
            raise MoneyOverflowError(f"{cents} minor units out of range")
        self.cents = cents

    @classmethod
    def parse(cls, text: str) -> "Money":
        """Parse a decimal string such as ``'1234.56'`` or ``'-0.05'``."""
        return round_half_up(text)

    def as_fraction(self) -> Fraction:
        return Fraction(self.cents, 100)

    def times(self, factor: Numeric) -> "Money":
        """Multiply by a scalar and round half-up to the nearest cent."""
        product = self.as_fraction() * _to_fraction(factor)
        return round_half_up(product)

    def __add__(self, other: "Money") -> "Money":
        return Money(self.cents + other.cents)

    def __sub__(self, other: "Money") -> "Money":
        return Money(self.cents - other.cents)

    def __neg__(self) -> "Money":
        return Money(-self.cents)

    def __abs__(self) -> "Money":
        return Money(abs(self.cents))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Money) and self.cents == other.cents

    def __lt__(self, other: "Money") -> bool:
        return self.cents < other.cents

    def __le__(self, other: "Money") -> bool:
        return self.cents <= other.cents

    def __gt__(self, other: "Money") -> bool:
        return self.cents > other.cents

    def __ge__(self, other: "Money") -> bool:
        return self.cents >= other.cents

    def __hash__(self) -> int:
        return hash(("Money", self.cents))

    def __bool__(self) -> bool:
        return self.cents != 0

    def is_negative(self) -> bool:
        return self.cents < 0

    def __str__(self) -> str:
        sign = "-" if self.cents < 0 else ""
        units, cc = divmod(abs(self.cents), 100)
        return f"{sign}{units}.{cc:02d}"

    def __repr__(self) -> str:
        return f"Money('{self}')"


ZERO = Money(0)


def round_half_up(raw: Numeric) -> Money:
    """Round an exact rational amount to the nearest cent, ties away from zero.

    271550.9295 -> 271550.93, 0.005 -> 0.01, -9.555 -> -9.56.
    """
    frac = _to_fraction(raw)
    cents = _div_round_half_away(frac.numerator * 100, frac.denominator)
    if abs(cents) > MAX_MINOR_UNITS:
        raise MoneyOverflowError(f"{frac} out of representable range")
    return Money(cents)


def money_sum(amounts) -> Money:
    total = 0
    for amount in amounts:
        total += amount.cents
    return Money(total)


# --- quantities (integer hundredths of a unit) -------------------------------

def qty_parse(text: str) -> int:
    """Parse '15.00' into 1500 hundredths of a unit."""
    value = Decimal(str(text).strip())
    scaled = value * 100
    if scaled != int(scaled):
        raise ValueError(f"quantity {text!r} has more than 2 decimal places")
    return int(scaled)


def qty_str(qty: int) -> str:
    sign = "-" if qty < 0 else ""
    units, cc = divmod(abs(qty), 100)
    return f"{sign}{units}.{cc:02d}"


def qty_times_price(qty: int, price: Money) -> Money:
    """amount = round(quantity * unit_price), computed exactly on integers."""
    return round_half_up(Fraction(qty * price.cents, 100 * 100))


# --- calendar helpers ---------------------------------------------------------

CalendarDate = _dt.date


def parse_date(text: str) -> CalendarDate:
    return _dt.date.fromisoformat(text)


def first_of_month(day: CalendarDate) -> CalendarDate:
    return day.replace(day=1)


def next_day(day: CalendarDate) -> CalendarDate:
    return day + _dt.timedelta(days=1)


# --- company profiles ---------------------------------------------------------

class CompanyKind(str, Enum):
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"
    TYPE_III = "TypeIII"
    TYPE_IV = "TypeIV"
    TYPE_V = "TypeV"
    CUSTOM = "Custom"


BUILTIN_KINDS = (
    CompanyKind.TYPE_I,
    CompanyKind.TYPE_II,
    CompanyKind.TYPE_III,
    CompanyKind.TYPE_IV,
    CompanyKind.TYPE_V,
)


class ProfileError(ValueError):
    """Profile document failed validation; message names the field."""


@dataclass(frozen=True)
class CompanyProfile:
    """Archetype parameters driving the daily activity simulation.

    Frequencies are expected events per day, expressed as a (min, max)
    band; each simulated day draws a rate uniformly in the band and the
    event count from a Poisson law with that rate.
    """

    kind: CompanyKind
    initial_cash: Money
    initial_bank: Money
    initial_fixed_assets: Money
    fixed_asset_purchase_freq: tuple[float, float]
    purchase_unit_price: Money
    profit_margin: tuple[float, float]
    quantity_per_purchase: int  # hundredths of a unit
    purchase_freq: tuple[float, float]
    credit_purchase_ratio: float
    quantity_per_sale: int  # hundredths of a unit
    sales_freq: tuple[float, float]
    credit_sales_ratio: float
    expense_freq: tuple[float, float]

    @property
    def paid_in_capital(self) -> Money:
        return self.initial_cash + self.initial_bank + self.initial_fixed_assets


_FREQ_FIELDS = (
    "fixed_asset_purchase_freq",
    "purchase_freq",
    "sales_freq",
    "expense_freq",
)
_RATIO_FIELDS = ("credit_purchase_ratio", "credit_sales_ratio")


def validate_profile(profile: CompanyProfile) -> CompanyProfile:
    for name in _FREQ_FIELDS:
        lo, hi = getattr(profile, name)
        if not (0 <= lo <= hi):
            raise ProfileError(f"{name}: expected 0 <= min <= max, got ({lo}, {hi})")
    lo, hi = profile.profit_margin
    if not (0 <= lo <= hi):
        raise ProfileError(f"profit_margin: expected 0 <= min <= max, got ({lo}, {hi})")
    for name in _RATIO_FIELDS:
        value = getattr(profile, name)
        if not (0.0 <= value <= 1.0):
            raise ProfileError(f"{name}: {value} outside [0, 1]")
    if profile.purchase_unit_price <= ZERO:
        raise ProfileError("purchase_unit_price: must be positive")
    for name in ("quantity_per_purchase", "quantity_per_sale"):
        if getattr(profile, name) <= 0:
            raise ProfileError(f"{name}: must be positive")
    for name in ("initial_cash", "initial_bank", "initial_fixed_assets"):
        if getattr(profile, name).is_negative():
            raise ProfileError(f"{name}: must not be negative")
    return profile


def _capital_split(total: Money) -> tuple[Money, Money, Money]:
    # 3/13 cash, 5/13 bank, remainder in fixed assets; exact for the 13M
    # archetypes and sums back to the total for every other capital level.
    cash = total.times(Fraction(3, 13))
    bank = total.times(Fraction(5, 13))
    fixed = total - cash - bank
    return cash, bank, fixed


def _build(kind, capital, fa_freq, price, margin, qpp, pf, cpr, qps, sf, csr, ef):
    cash, bank, fixed = _capital_split(Money.parse(capital))
    return validate_profile(CompanyProfile(
        kind=kind,
        initial_cash=cash,
        initial_bank=bank,
        initial_fixed_assets=fixed,
        fixed_asset_purchase_freq=fa_freq,
        purchase_unit_price=Money.parse(price),
        profit_margin=margin,
        quantity_per_purchase=qty_parse(qpp),
        purchase_freq=pf,
        credit_purchase_ratio=cpr,
        quantity_per_sale=qty_parse(qps),
        sales_freq=sf,
        credit_sales_ratio=csr,
        expense_freq=ef,
    ))


_BUILTINS = {
    CompanyKind.TYPE_I: _build(
        CompanyKind.TYPE_I, "28000000",
        (0.00, 2.00), "950000", (0.30, 0.50), "1.00",
        (1.00, 2.00), 0.1, "1.00", (0.00, 1.00), 0.6, (1.00, 2.00)),
    CompanyKind.TYPE_II: _build(
        CompanyKind.TYPE_II, "13000000",
        (1.00, 2.00), "45000", (0.10, 0.40), "15.00",
        (1.00, 3.00), 0.1, "5.00", (1.00, 2.00), 0.4, (2.00, 4.00)),
    CompanyKind.TYPE_III: _build(
        CompanyKind.TYPE_III, "13000000",
        (1.00, 2.00), "21250", (0.70, 1.00), "5.00",
        (2.00, 4.00), 0.3, "3.00", (2.00, 4.00), 0.3, (2.00, 3.00)),
    CompanyKind.TYPE_IV: _build(
        CompanyKind.TYPE_IV, "13000000",
        (0.00, 1.00), "31500", (0.80, 2.00), "2.00",
        (0.00, 2.00), 0.3, "1.00", (0.00, 3.00), 0.7, (1.00, 2.00)),
    CompanyKind.TYPE_V: _build(
        CompanyKind.TYPE_V, "16000000",
        (0.00, 2.00), "1823", (0.30, 0.80), "500.00",
        (1.00, 3.00), 0.6, "5.00", (2.00, 4.00), 0.4, (1.00, 2.00)),
}


def builtin_profile(kind: CompanyKind | str) -> CompanyProfile:
    """Return the archetype parameter row for one of the five company types."""
    if isinstance(kind, str):
        kind = CompanyKind(kind)
    if kind not in _BUILTINS:
        raise ProfileError(f"kind: {kind.value} is not a builtin company type")
    return _BUILTINS[kind]


# --- profile documents (flat key/value JSON) ----------------------------------

def profile_to_dict(profile: CompanyProfile) -> dict:
    return {
        "kind": profile.kind.value,
        "initial_cash": str(profile.initial_cash),
        "initial_bank": str(profile.initial_bank),
        "initial_fixed_assets": str(profile.initial_fixed_assets),
        "fixed_asset_purchase_freq_min": profile.fixed_asset_purchase_freq[0],
        "fixed_asset_purchase_freq_max": profile.fixed_asset_purchase_freq[1],
        "purchase_unit_price": str(profile.purchase_unit_price),
        "profit_margin_min": profile.profit_margin[0],
        "profit_margin_max": profile.profit_margin[1],
        "quantity_per_purchase": qty_str(profile.quantity_per_purchase),
        "purchase_freq_min": profile.purchase_freq[0],
        "purchase_freq_max": profile.purchase_freq[1],
        "credit_purchase_ratio": profile.credit_purchase_ratio,
        "quantity_per_sale": qty_str(profile.quantity_per_sale),
        "sales_freq_min": profile.sales_freq[0],
        "sales_freq_max": profile.sales_freq[1],
        "credit_sales_ratio": profile.credit_sales_ratio,
        "expense_freq_min": profile.expense_freq[0],
        "expense_freq_max": profile.expense_freq[1],
    }


def profile_from_dict(doc: dict) -> CompanyProfile:
    def need(key):
        if key not in doc:
            raise ProfileError(f"{key}: missing")
        return doc[key]

    def money(key):
        try:
            return Money.parse(str(need(key)))
        except (ValueError, ArithmeticError) as exc:
            raise ProfileError(f"{key}: {exc}") from exc

    def number(key):
        value = need(key)
        try:
            return float(value)
        except (TypeError, ValueError) as exc:
            raise ProfileError(f"{key}: not a number") from exc

    def qty(key):
        try:
            return qty_parse(str(need(key)))
        except (ValueError, ArithmeticError) as exc:
            raise ProfileError(f"{key}: {exc}") from exc

    try:
        kind = CompanyKind(str(need("kind")))
    except ValueError as exc:
        raise ProfileError(f"kind: {doc.get('kind')!r} unknown") from exc

    profile = CompanyProfile(
        kind=kind,
        initial_cash=money("initial_cash"),
        initial_bank=money("initial_bank"),
        initial_fixed_assets=money("initial_fixed_assets"),
        fixed_asset_purchase_freq=(
            number("fixed_asset_purchase_freq_min"),
            number("fixed_asset_purchase_freq_max"),
        ),
        purchase_unit_price=money("purchase_unit_price"),
        profit_margin=(number("profit_margin_min"), number("profit_margin_max")),
        quantity_per_purchase=qty("quantity_per_purchase"),
        purchase_freq=(number("purchase_freq_min"), number("purchase_freq_max")),
        credit_purchase_ratio=number("credit_purchase_ratio"),
        quantity_per_sale=qty("quantity_per_sale"),
        sales_freq=(number("sales_freq_min"), number("sales_freq_max")),
        credit_sales_ratio=number("credit_sales_ratio"),
        expense_freq=(number("expense_freq_min"), number("expense_freq_max")),
    )
    return validate_profile(profile)


def load_profile(path: str | Path) -> CompanyProfile:
    """Load and validate a flat key/value profile document."""
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ProfileError(f"profile document: {exc}") from exc
    if not isinstance(doc, dict):
        raise ProfileError("profile document: expected a flat JSON object")
    return profile_from_dict(doc)


def save_profile(profile: CompanyProfile, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(profile_to_dict(profile), indent=2) + "\n", encoding="utf-8")
