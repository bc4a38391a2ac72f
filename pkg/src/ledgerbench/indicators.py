"""The 18 diagnostic indicators computed from a statement set.

Values are exact rationals; the two-decimal display string is the unit of
equality used when scoring model answers, so percentages and ratios are
rounded half-up at exactly one place.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .core import Money, round_half_up
from .statements import StatementSet


class Dimension(str, Enum):
    CASH_FLOW_QUALITY = "Cash Flow Quality"
    PROFITABILITY = "Profitability"
    LIQUIDITY = "Liquidity"
    SOLVENCY = "Solvency"
    OPERATIONAL_EFFICIENCY = "Operational Efficiency"


class IndicatorId(str, Enum):
    FCF = "Free Cash Flow (FCF)"
    OCF_TO_NET_INCOME = "Operating Cash Flow to Net Income Ratio"
    OCF_RATIO = "Operating Cash Flow Ratio"
    GROSS_MARGIN = "Gross Profit Margin"
    NET_MARGIN = "Net Profit Margin"
    ROA = "Return on Assets (ROA)"
    ROE = "Return on Equity (ROE)"
    CURRENT_RATIO = "Current Ratio"
    QUICK_RATIO = "Quick Ratio"
    CASH_TO_CURRENT_DEBT = "Cash to Current Debt Ratio"
    OCF_TO_CURRENT_LIABILITIES = (
        "Operating Cash Flow to Current Liabilities Ratio")
    DEBT_TO_ASSET = "Debt to Asset Ratio"
    DEBT_TO_EQUITY = "Debt to Equity Ratio"
    CASH_FLOW_TO_DEBT = "Cash Flow to Debt Ratio"
    INVENTORY_TURNOVER = "Inventory Turnover Ratio"
    AR_TURNOVER = "Accounts Receivable Turnover Ratio"
    CURRENT_ASSETS_TURNOVER = "Current Assets Turnover Ratio"
    TOTAL_ASSET_TURNOVER = "Total Asset Turnover Ratio"


DIMENSIONS: dict[IndicatorId, Dimension] = {
    IndicatorId.FCF: Dimension.CASH_FLOW_QUALITY,
    IndicatorId.OCF_TO_NET_INCOME: Dimension.CASH_FLOW_QUALITY,
    IndicatorId.OCF_RATIO: Dimension.CASH_FLOW_QUALITY,
    IndicatorId.GROSS_MARGIN: Dimension.PROFITABILITY,
    IndicatorId.NET_MARGIN: Dimension.PROFITABILITY,
    IndicatorId.ROA: Dimension.PROFITABILITY,
    IndicatorId.ROE: Dimension.PROFITABILITY,
    IndicatorId.CURRENT_RATIO: Dimension.LIQUIDITY,
    IndicatorId.QUICK_RATIO: Dimension.LIQUIDITY,
    IndicatorId.CASH_TO_CURRENT_DEBT: Dimension.LIQUIDITY,
    IndicatorId.OCF_TO_CURRENT_LIABILITIES: Dimension.LIQUIDITY,
    IndicatorId.DEBT_TO_ASSET: Dimension.SOLVENCY,
    IndicatorId.DEBT_TO_EQUITY: Dimension.SOLVENCY,
    IndicatorId.CASH_FLOW_TO_DEBT: Dimension.SOLVENCY,
    IndicatorId.INVENTORY_TURNOVER: Dimension.OPERATIONAL_EFFICIENCY,
    IndicatorId.AR_TURNOVER: Dimension.OPERATIONAL_EFFICIENCY,
    IndicatorId.CURRENT_ASSETS_TURNOVER: Dimension.OPERATIONAL_EFFICIENCY,
    IndicatorId.TOTAL_ASSET_TURNOVER: Dimension.OPERATIONAL_EFFICIENCY,
}

# Classification-table order; compute_all() reports in this order.
INDICATOR_ORDER = tuple(DIMENSIONS)

_PERCENT_IDS = frozenset({
    IndicatorId.GROSS_MARGIN, IndicatorId.NET_MARGIN,
    IndicatorId.ROA, IndicatorId.ROE,
})


class UndefinedIndicatorError(ZeroDivisionError):
    """The formula's denominator is zero; names the offending line."""

    def __init__(self, indicator: IndicatorId, denominator: str):
        super().__init__(f"{indicator.value}: {denominator} is zero")
        self.indicator = indicator
        self.denominator = denominator


@dataclass(frozen=True)
class IndicatorValue:
    id: IndicatorId
    value: Optional[Fraction]
    display: str
    undefined_reason: Optional[str] = None

    @property
    def dimension(self) -> Dimension:
        return DIMENSIONS[self.id]


def _f(amount: Money) -> Fraction:
    return amount.as_fraction()


def _ratio(indicator: IndicatorId, numerator: Fraction,
           denominator: Fraction, denominator_name: str) -> Fraction:
    if denominator == 0:
        raise UndefinedIndicatorError(indicator, denominator_name)
    return numerator / denominator


def _raw_value(indicator: IndicatorId, s: StatementSet) -> Fraction:
    bs, inc, cfs = s.balance_sheet, s.income_statement, s.cash_flow_statement
    op = _f(cfs.net_operating_cash_flow)
    if indicator is IndicatorId.FCF:
        return op - _f(cfs.purchase_of_fixed_assets)
    if indicator is IndicatorId.OCF_TO_NET_INCOME:
        return _ratio(indicator, op, _f(inc.net_profit), "net profit")
    if indicator is IndicatorId.OCF_RATIO:
        return _ratio(indicator, op, _f(bs.end.total_current_liabilities),
                      "current liabilities")
    if indicator is IndicatorId.GROSS_MARGIN:
        revenue = _f(inc.total_revenue)
        return _ratio(indicator, revenue - _f(inc.cost_of_goods_sold),
                      revenue, "revenue") * 100
    if indicator is IndicatorId.NET_MARGIN:
        return _ratio(indicator, _f(inc.net_profit),
                      _f(inc.total_revenue), "revenue") * 100
    if indicator is IndicatorId.ROA:
        return _ratio(indicator, 2 * _f(inc.net_profit),
                      _f(bs.initial.total_assets) + _f(bs.end.total_assets),
                      "beginning + ending total assets") * 100
    if indicator is IndicatorId.ROE:
        return _ratio(
            indicator, 2 * _f(inc.net_profit),
            _f(bs.initial.total_owners_equity) + _f(bs.end.total_owners_equity),
            "beginning + ending owner's equity") * 100
    if indicator is IndicatorId.CURRENT_RATIO:
        return _ratio(indicator, _f(bs.end.total_current_assets),
                      _f(bs.end.total_current_liabilities),
                      "current liabilities")
    if indicator is IndicatorId.QUICK_RATIO:
        return _ratio(indicator,
                      _f(bs.end.total_current_assets) - _f(bs.end.inventory),
                      _f(bs.end.total_current_liabilities),
                      "current liabilities")
    if indicator is IndicatorId.CASH_TO_CURRENT_DEBT:
        return _ratio(indicator, _f(cfs.ending_cash_balance),
                      _f(bs.end.total_current_liabilities),
                      "current liabilities")
    if indicator is IndicatorId.OCF_TO_CURRENT_LIABILITIES:
        return _ratio(indicator, op, _f(bs.end.total_current_liabilities),
                      "ending current liabilities")
    if indicator is IndicatorId.DEBT_TO_ASSET:
        return _ratio(indicator, _f(bs.end.total_liabilities),
                      _f(bs.end.total_assets), "total assets")
    if indicator is IndicatorId.DEBT_TO_EQUITY:
        return _ratio(indicator, _f(bs.end.total_liabilities),
                      _f(bs.end.total_owners_equity), "owner's equity")
    if indicator is IndicatorId.CASH_FLOW_TO_DEBT:
        return _ratio(indicator, op, _f(bs.end.total_liabilities),
                      "total liabilities")
    if indicator is IndicatorId.INVENTORY_TURNOVER:
        return _ratio(indicator, 2 * _f(inc.cost_of_goods_sold),
                      _f(bs.initial.inventory) + _f(bs.end.inventory),
                      "beginning + ending inventory")
    if indicator is IndicatorId.AR_TURNOVER:
        return _ratio(
            indicator, 2 * _f(inc.total_revenue),
            _f(bs.initial.accounts_receivable) + _f(bs.end.accounts_receivable),
            "beginning + ending accounts receivable")
    if indicator is IndicatorId.CURRENT_ASSETS_TURNOVER:
        return _ratio(
            indicator, 2 * _f(inc.total_revenue),
            _f(bs.initial.total_current_assets) + _f(bs.end.total_current_assets),
            "beginning + ending current assets")
    if indicator is IndicatorId.TOTAL_ASSET_TURNOVER:
        return _ratio(indicator, 2 * _f(inc.total_revenue),
                      _f(bs.initial.total_assets) + _f(bs.end.total_assets),
                      "beginning + ending total assets")
    raise ValueError(f"unknown indicator {indicator!r}")  # pragma: no cover


def display_number(value: Fraction) -> str:
    """Canonical two-decimal rendering, half-up, ties away from zero."""
    return str(round_half_up(value))


def format_indicator(indicator: IndicatorId, value: Fraction) -> str:
    if indicator in _PERCENT_IDS:
        return display_number(value) + "%"
    return display_number(value)


def compute(indicator: IndicatorId, statements: StatementSet) -> IndicatorValue:
    """Evaluate one indicator; raises UndefinedIndicatorError on a zero denominator."""
    value = _raw_value(indicator, statements)
    return IndicatorValue(id=indicator, value=value,
                          display=format_indicator(indicator, value))


def compute_all(statements: StatementSet) -> list[IndicatorValue]:
    """All 18 indicators in classification order; undefined ones are marked."""
    results = []
    for indicator in INDICATOR_ORDER:
        try:
            results.append(compute(indicator, statements))
        except UndefinedIndicatorError as exc:
            results.append(IndicatorValue(
                id=indicator, value=None, display="N/A",
                undefined_reason=str(exc)))
    return results


def indicator_report(statements: StatementSet) -> dict[str, str]:
    """JSON-ready map from indicator name to display string."""
    return {item.id.value: item.display for item in compute_all(statements)}
