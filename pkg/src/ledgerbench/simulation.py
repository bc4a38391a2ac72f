"""Seeded daily simulation producing an ordered journal of transactions.

One :class:`random.Random` stream, seeded from the run seed, drives every
draw in a fixed order, so a (profile, config) pair always serializes to the
same bytes. Each day posts purchases, sales, expenses and fixed-asset
purchases per the profile's frequency bands, with monthly depreciation and
interest accruals on the 1st and a cash top-up from the bank whenever the
cash balance drops below the configured threshold.
"""

from __future__ import annotations

import datetime as _dt
import hashlib
import json
import math
import random
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Optional

from .core import (
    ZERO,
    CalendarDate,
    CompanyProfile,
    Money,
    money_sum,
    next_day,
    parse_date,
    profile_from_dict,
    profile_to_dict,
    qty_str,
    qty_times_price,
    round_half_up,
    validate_profile,
)

JOURNAL_FORMAT = "ledgerbench.journal.v1"

# Fixed rosters; which name signs a given transaction is a seeded draw.
PREPARER_POOL = (
    "Alice Chen", "Brian Foster", "Carmen Diaz", "Daniel Reed",
    "Elena Petrov", "Frank Miller", "Grace Liu", "Henry Adams",
)
APPROVER_POOL = (
    "Irene Wong", "Jack Turner", "Karen Patel", "Lucas Moreau",
    "Maria Silva", "Noah Kim", "Olivia Grant", "Peter Novak",
)
SYSTEM_NAME = "System"


class TxType(str, Enum):
    SALE = "Sale"
    PURCHASE = "Purchase"
    FIXED_ASSET_PURCHASE = "Fixed Asset Purchase"
    DEPRECIATION = "Depreciation"
    ADMINISTRATIVE_EXPENSE = "Administrative Expense"
    SELLING_EXPENSE = "Selling Expense"
    FINANCIAL_EXPENSE = "Financial Expense"
    INTEREST_RECEIVABLE = "Interest Receivable"
    BANK_TO_CASH_TRANSFER = "Bank to Cash Transfer"
    CASH_TO_BANK_TRANSFER = "Cash to Bank Transfer"


EXPENSE_TYPES = (
    TxType.ADMINISTRATIVE_EXPENSE,
    TxType.SELLING_EXPENSE,
    TxType.FINANCIAL_EXPENSE,
)

# Notices generated by the books themselves rather than signed by a person.
SYSTEM_TYPES = (
    TxType.DEPRECIATION,
    TxType.INTEREST_RECEIVABLE,
    TxType.BANK_TO_CASH_TRANSFER,
    TxType.CASH_TO_BANK_TRANSFER,
)


class PayStatus(str, Enum):
    PAID = "Paid"
    RECEIVED = "Received"
    OUTSTANDING = "Outstanding"
    NA = "N/A"


class PayMethod(str, Enum):
    CASH = "Cash"
    BANK_TRANSFER = "Bank Transfer"
    CREDIT = "Credit"
    NA = "N/A"


# The thirteen fields an auditor is asked to verify on every record;
# cost_amount and profit ride along on sales and are audited through the
# profit-calculation error only.
AUDITABLE_FIELDS = (
    "id", "date", "tx_type", "quantity", "unit_price", "amount",
    "tax_amount", "total_amount", "payment_receipt_status",
    "payment_method", "receive_method", "preparer", "approver",
)

# Serialization order for journal lines.
FIELD_ORDER = (
    "id", "date", "tx_type", "quantity", "unit_price", "amount",
    "tax_amount", "total_amount", "cost_amount", "profit",
    "payment_receipt_status", "payment_method", "receive_method",
    "preparer", "approver",
)


@dataclass(frozen=True)
class Transaction:
    id: str
    date: CalendarDate
    tx_type: TxType
    quantity: int  # hundredths of a unit, 0 for non-goods entries
    unit_price: Money
    amount: Money
    tax_amount: Money
    total_amount: Money
    cost_amount: Money
    profit: Money
    payment_receipt_status: PayStatus
    payment_method: PayMethod
    receive_method: PayMethod
    preparer: str
    approver: str

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "date": self.date.isoformat(),
            "tx_type": self.tx_type.value,
            "quantity": qty_str(self.quantity),
            "unit_price": str(self.unit_price),
            "amount": str(self.amount),
            "tax_amount": str(self.tax_amount),
            "total_amount": str(self.total_amount),
            "cost_amount": str(self.cost_amount),
            "profit": str(self.profit),
            "payment_receipt_status": self.payment_receipt_status.value,
            "payment_method": self.payment_method.value,
            "receive_method": self.receive_method.value,
            "preparer": self.preparer,
            "approver": self.approver,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "Transaction":
        from .core import qty_parse
        return cls(
            id=rec["id"],
            date=parse_date(rec["date"]),
            tx_type=TxType(rec["tx_type"]),
            quantity=qty_parse(rec["quantity"]),
            unit_price=Money.parse(rec["unit_price"]),
            amount=Money.parse(rec["amount"]),
            tax_amount=Money.parse(rec["tax_amount"]),
            total_amount=Money.parse(rec["total_amount"]),
            cost_amount=Money.parse(rec["cost_amount"]),
            profit=Money.parse(rec["profit"]),
            payment_receipt_status=PayStatus(rec["payment_receipt_status"]),
            payment_method=PayMethod(rec["payment_method"]),
            receive_method=PayMethod(rec["receive_method"]),
            preparer=rec["preparer"],
            approver=rec["approver"],
        )


@dataclass(frozen=True)
class SimulationConfig:
    seed: int
    start_date: CalendarDate = _dt.date(2024, 1, 1)
    end_date: Optional[CalendarDate] = None
    target_transactions: Optional[int] = None
    cash_threshold: Money = Money.parse("100000.00")
    cash_topup: Money = Money.parse("1000000.00")
    cash_ceiling: Money = Money.parse("100000000.00")
    sales_tax_rate: Fraction = Fraction(5, 100)
    monthly_interest_rate: Fraction = Fraction(5, 10000)
    depreciation_months: int = 120
    expense_band: tuple[Money, Money] = (
        Money.parse("5000.00"), Money.parse("60000.00"))
    fixed_asset_cost_band: tuple[Money, Money] = (
        Money.parse("1000.00"), Money.parse("5000.00"))

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "start_date": self.start_date.isoformat(),
            "end_date": self.end_date.isoformat() if self.end_date else None,
            "target_transactions": self.target_transactions,
            "cash_threshold": str(self.cash_threshold),
            "cash_topup": str(self.cash_topup),
            "cash_ceiling": str(self.cash_ceiling),
            "sales_tax_rate": str(self.sales_tax_rate),
            "monthly_interest_rate": str(self.monthly_interest_rate),
            "depreciation_months": self.depreciation_months,
            "expense_band": [str(self.expense_band[0]), str(self.expense_band[1])],
            "fixed_asset_cost_band": [
                str(self.fixed_asset_cost_band[0]),
                str(self.fixed_asset_cost_band[1]),
            ],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "SimulationConfig":
        return cls(
            seed=int(doc["seed"]),
            start_date=parse_date(doc["start_date"]),
            end_date=parse_date(doc["end_date"]) if doc.get("end_date") else None,
            target_transactions=doc.get("target_transactions"),
            cash_threshold=Money.parse(doc["cash_threshold"]),
            cash_topup=Money.parse(doc["cash_topup"]),
            cash_ceiling=Money.parse(doc["cash_ceiling"]),
            sales_tax_rate=Fraction(doc["sales_tax_rate"]),
            monthly_interest_rate=Fraction(doc["monthly_interest_rate"]),
            depreciation_months=int(doc["depreciation_months"]),
            expense_band=(
                Money.parse(doc["expense_band"][0]),
                Money.parse(doc["expense_band"][1]),
            ),
            fixed_asset_cost_band=(
                Money.parse(doc["fixed_asset_cost_band"][0]),
                Money.parse(doc["fixed_asset_cost_band"][1]),
            ),
        )


class ConfigError(ValueError):
    """Simulation configuration is malformed."""


class SimulationError(RuntimeError):
    """The run could not satisfy its contract; carries a failure report."""

    def __init__(self, report: dict):
        super().__init__(report.get("reason", "simulation failure"))
        self.report = report


def validate_config(config: SimulationConfig) -> SimulationConfig:
    if config.seed < 0 or config.seed >= 2**64:
        raise ConfigError("seed: must fit in 64 unsigned bits")
    if config.end_date is None and config.target_transactions is None:
        raise ConfigError("end_date/target_transactions: at least one bound required")
    if config.end_date is not None and config.start_date > config.end_date:
        raise ConfigError("start_date: must not exceed end_date")
    if config.target_transactions is not None and config.target_transactions < 0:
        raise ConfigError("target_transactions: must be non-negative")
    for name in ("sales_tax_rate", "monthly_interest_rate"):
        rate = getattr(config, name)
        if not (0 <= rate < 1):
            raise ConfigError(f"{name}: must lie in [0, 1)")
    if config.depreciation_months < 1:
        raise ConfigError("depreciation_months: must be >= 1")
    lo, hi = config.expense_band
    if not (ZERO < lo <= hi):
        raise ConfigError("expense_band: expected 0 < min <= max")
    lo, hi = config.fixed_asset_cost_band
    if not (ZERO < lo <= hi):
        raise ConfigError("fixed_asset_cost_band: expected 0 < min <= max")
    if config.cash_threshold.is_negative() or config.cash_topup.is_negative():
        raise ConfigError("cash_threshold/cash_topup: must not be negative")
    return config


@dataclass(frozen=True)
class Opening:
    cash: Money
    bank: Money
    fixed_assets: Money
    paid_in_capital: Money

    def to_dict(self) -> dict:
        return {
            "cash": str(self.cash),
            "bank": str(self.bank),
            "fixed_assets": str(self.fixed_assets),
            "paid_in_capital": str(self.paid_in_capital),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "Opening":
        return cls(
            cash=Money.parse(doc["cash"]),
            bank=Money.parse(doc["bank"]),
            fixed_assets=Money.parse(doc["fixed_assets"]),
            paid_in_capital=Money.parse(doc["paid_in_capital"]),
        )


@dataclass(frozen=True)
class Journal:
    profile: CompanyProfile
    config: SimulationConfig
    opening: Opening
    transactions: tuple[Transaction, ...]
    warnings: tuple[str, ...] = ()

    def digest(self) -> str:
        return hashlib.sha256(dumps_journal(self).encode("utf-8")).hexdigest()


def derive_seed(seed: int, label: str) -> int:
    """Stable sub-seed derivation: sha256 over 'seed:label', first 8 bytes."""
    digest = hashlib.sha256(f"{seed}:{label}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def _poisson(rng: random.Random, lam: float) -> int:
    # Knuth's product method; rates here stay in single digits.
    if lam <= 0:
        return 0
    limit = math.exp(-lam)
    count = 0
    product = rng.random()
    while product > limit:
        count += 1
        product *= rng.random()
    return count


def _log_uniform_money(rng: random.Random, band: tuple[Money, Money]) -> Money:
    lo, hi = band
    if lo == hi:
        return lo
    draw = math.exp(rng.uniform(math.log(lo.cents), math.log(hi.cents)))
    cents = min(max(int(round(draw)), lo.cents), hi.cents)
    return Money(cents)


class _SimState:
    """Mutable balances threaded through the day loop."""

    def __init__(self, profile: CompanyProfile, config: SimulationConfig):
        self.profile = profile
        self.config = config
        self.cash = profile.initial_cash
        self.bank = profile.initial_bank
        self.inventory_qty = 0
        self.inventory_value = ZERO
        # Asset blocks: the opening balance plus every in-horizon purchase.
        self.assets: list[Money] = []
        if profile.initial_fixed_assets > ZERO:
            self.assets.append(profile.initial_fixed_assets)
        self.expense_cursor = 0
        self.counter = 0
        self.warnings: list[str] = []

    def next_id(self) -> str:
        self.counter += 1
        return f"TXN-{self.counter:05d}"


def _pick_names(rng: random.Random) -> tuple[str, str]:
    return rng.choice(PREPARER_POOL), rng.choice(APPROVER_POOL)


def _pay_from(state: _SimState, rng: random.Random, amount: Money):
    """Pick cash or bank for an immediate payment; None if unaffordable."""
    method = PayMethod.CASH if rng.random() < 0.5 else PayMethod.BANK_TRANSFER
    if method is PayMethod.CASH and state.cash < amount:
        method = PayMethod.BANK_TRANSFER
    if method is PayMethod.BANK_TRANSFER and state.bank < amount:
        method = PayMethod.CASH
    if method is PayMethod.CASH and state.cash < amount:
        return None
    if method is PayMethod.CASH:
        state.cash = state.cash - amount
    else:
        state.bank = state.bank - amount
    return method


def _goods_txn(state, rng, date, tx_type, qty, unit_price, amount, tax, cost,
               profit, status, pay_method, receive_method):
    preparer, approver = _pick_names(rng)
    return Transaction(
        id=state.next_id(), date=date, tx_type=tx_type,
        quantity=qty, unit_price=unit_price, amount=amount, tax_amount=tax,
        total_amount=amount + tax, cost_amount=cost, profit=profit,
        payment_receipt_status=status, payment_method=pay_method,
        receive_method=receive_method, preparer=preparer, approver=approver)


def _purchase(state: _SimState, rng: random.Random, date: CalendarDate):
    profile = state.profile
    qty = profile.quantity_per_purchase
    amount = qty_times_price(qty, profile.purchase_unit_price)
    if rng.random() < profile.credit_purchase_ratio:
        method, status = PayMethod.CREDIT, PayStatus.OUTSTANDING
    else:
        method = _pay_from(state, rng, amount)
        if method is None:
            return None
        status = PayStatus.PAID
    state.inventory_qty += qty
    state.inventory_value = state.inventory_value + amount
    return _goods_txn(state, rng, date, TxType.PURCHASE, qty,
                      profile.purchase_unit_price, amount, ZERO, ZERO, ZERO,
                      status, method, PayMethod.NA)


def _sale(state: _SimState, rng: random.Random, date: CalendarDate):
    profile = state.profile
    if state.inventory_qty <= 0:
        return None
    qty = min(profile.quantity_per_sale, state.inventory_qty)
    margin = rng.uniform(*profile.profit_margin)
    unit_price = round_half_up(
        profile.purchase_unit_price.as_fraction() * (1 + Fraction(str(margin))))
    amount = qty_times_price(qty, unit_price)
    tax = amount.times(state.config.sales_tax_rate)
    if qty == state.inventory_qty:
        cost = state.inventory_value  # drain the book value exactly
    else:
        cost = qty_times_price(qty, profile.purchase_unit_price)
    state.inventory_qty -= qty
    state.inventory_value = state.inventory_value - cost
    if rng.random() < profile.credit_sales_ratio:
        receive, status = PayMethod.CREDIT, PayStatus.OUTSTANDING
    else:
        receive = PayMethod.CASH if rng.random() < 0.5 else PayMethod.BANK_TRANSFER
        status = PayStatus.RECEIVED
        if receive is PayMethod.CASH:
            state.cash = state.cash + amount
        else:
            state.bank = state.bank + amount
    return _goods_txn(state, rng, date, TxType.SALE, qty, unit_price,
                      amount, tax, cost, amount - cost, status,
                      PayMethod.NA, receive)


def _expense(state: _SimState, rng: random.Random, date: CalendarDate):
    tx_type = EXPENSE_TYPES[state.expense_cursor % len(EXPENSE_TYPES)]
    state.expense_cursor += 1
    amount = _log_uniform_money(rng, state.config.expense_band)
    method = _pay_from(state, rng, amount)
    if method is None:
        return None
    preparer, approver = _pick_names(rng)
    return Transaction(
        id=state.next_id(), date=date, tx_type=tx_type, quantity=0,
        unit_price=ZERO, amount=amount, tax_amount=ZERO, total_amount=amount,
        cost_amount=ZERO, profit=ZERO, payment_receipt_status=PayStatus.PAID,
        payment_method=method, receive_method=PayMethod.NA,
        preparer=preparer, approver=approver)


def _fixed_asset_purchase(state: _SimState, rng: random.Random, date):
    cost = _log_uniform_money(rng, state.config.fixed_asset_cost_band)
    method = _pay_from(state, rng, cost)
    if method is None:
        return None
    state.assets.append(cost)
    preparer, approver = _pick_names(rng)
    return Transaction(
        id=state.next_id(), date=date, tx_type=TxType.FIXED_ASSET_PURCHASE,
        quantity=0, unit_price=ZERO, amount=cost, tax_amount=ZERO,
        total_amount=cost, cost_amount=ZERO, profit=ZERO,
        payment_receipt_status=PayStatus.PAID, payment_method=method,
        receive_method=PayMethod.NA, preparer=preparer, approver=approver)


def _notice(state: _SimState, date: CalendarDate, tx_type: TxType, amount: Money):
    return Transaction(
        id=state.next_id(), date=date, tx_type=tx_type, quantity=0,
        unit_price=ZERO, amount=amount, tax_amount=ZERO, total_amount=amount,
        cost_amount=ZERO, profit=ZERO, payment_receipt_status=PayStatus.NA,
        payment_method=PayMethod.NA, receive_method=PayMethod.NA,
        preparer=SYSTEM_NAME, approver=SYSTEM_NAME)


def _month_boundary(state: _SimState, date: CalendarDate):
    emitted = []
    months = state.config.depreciation_months
    dep = money_sum(round_half_up(Fraction(a.cents, 100 * months))
                    for a in state.assets)
    if dep > ZERO:
        emitted.append(_notice(state, date, TxType.DEPRECIATION, dep))
    if state.bank > ZERO:
        interest = state.bank.times(state.config.monthly_interest_rate)
        if interest > ZERO:
            emitted.append(_notice(state, date, TxType.INTEREST_RECEIVABLE, interest))
    return emitted


def _cash_management(state: _SimState, date: CalendarDate):
    emitted = []
    if state.cash < state.config.cash_threshold:
        transfer = min(state.config.cash_topup, state.bank)
        if transfer > ZERO:
            state.bank = state.bank - transfer
            state.cash = state.cash + transfer
            emitted.append(_notice(
                state, date, TxType.BANK_TO_CASH_TRANSFER, transfer))
        else:
            state.warnings.append(
                f"{date.isoformat()}: cash below threshold, bank exhausted")
    if state.cash > state.config.cash_ceiling:
        transfer = state.cash - state.config.cash_ceiling
        state.cash = state.cash - transfer
        state.bank = state.bank + transfer
        emitted.append(_notice(
            state, date, TxType.CASH_TO_BANK_TRANSFER, transfer))
    return emitted


# Hard stop for target-driven runs that stall (everything infeasible).
_MAX_HORIZON_DAYS = 36500


def simulate(profile: CompanyProfile, config: SimulationConfig) -> Journal:
    """Run the daily simulation and return the ordered journal.

    Deterministic for a fixed (profile, config): two runs serialize to
    byte-identical JSON lines. If ``target_transactions`` is set the run
    stops the moment that many transactions have been emitted.
    """
    validate_profile(profile)
    validate_config(config)
    rng = random.Random(derive_seed(config.seed, "simulation"))
    state = _SimState(profile, config)
    target = config.target_transactions
    transactions: list[Transaction] = []
    done = target == 0

    def push(txn) -> bool:
        transactions.append(txn)
        return target is not None and len(transactions) >= target

    date = config.start_date
    while not done:
        if config.end_date is not None and date > config.end_date:
            break
        if (date - config.start_date).days > _MAX_HORIZON_DAYS:
            raise SimulationError({
                "reason": "target_transactions unreachable",
                "detail": f"only {len(transactions)} transactions emitted "
                          f"after {_MAX_HORIZON_DAYS} days",
                "seed": config.seed,
            })
        day_events: list[Transaction] = []
        if date.day == 1:
            day_events.extend(_month_boundary(state, date))
        counts = []
        for band in (profile.purchase_freq, profile.sales_freq,
                     profile.expense_freq, profile.fixed_asset_purchase_freq):
            rate = rng.uniform(*band)
            counts.append(_poisson(rng, rate))
        n_purchases, n_sales, n_expenses, n_fa = counts
        for _ in range(n_purchases):
            txn = _purchase(state, rng, date)
            if txn:
                day_events.append(txn)
        for _ in range(n_sales):
            txn = _sale(state, rng, date)
            if txn:
                day_events.append(txn)
        for _ in range(n_expenses):
            txn = _expense(state, rng, date)
            if txn:
                day_events.append(txn)
        for _ in range(n_fa):
            txn = _fixed_asset_purchase(state, rng, date)
            if txn:
                day_events.append(txn)
        day_events.extend(_cash_management(state, date))
        for txn in day_events:
            if push(txn):
                done = True
                break
        date = next_day(date)

    if target is not None and len(transactions) < target:
        raise SimulationError({
            "reason": "target_transactions unreachable",
            "detail": f"horizon ended at {config.end_date} with "
                      f"{len(transactions)} of {target} transactions",
            "seed": config.seed,
        })

    opening = Opening(
        cash=profile.initial_cash,
        bank=profile.initial_bank,
        fixed_assets=profile.initial_fixed_assets,
        paid_in_capital=profile.paid_in_capital,
    )
    return Journal(
        profile=profile, config=config, opening=opening,
        transactions=tuple(transactions), warnings=tuple(state.warnings))


# --- serialization -------------------------------------------------------------

def _dump_line(doc: dict) -> str:
    return json.dumps(doc, separators=(", ", ": "), ensure_ascii=False)


def dumps_journal(journal: Journal) -> str:
    header = {
        "format": JOURNAL_FORMAT,
        "profile": profile_to_dict(journal.profile),
        "config": journal.config.to_dict(),
        "opening": journal.opening.to_dict(),
        "warnings": list(journal.warnings),
    }
    lines = [_dump_line(header)]
    lines.extend(_dump_line(t.to_record()) for t in journal.transactions)
    return "\n".join(lines) + "\n"


def loads_journal(text: str) -> Journal:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty journal document")
    header = json.loads(lines[0])
    if header.get("format") != JOURNAL_FORMAT:
        raise ValueError(f"unexpected journal format {header.get('format')!r}")
    transactions = tuple(
        Transaction.from_record(json.loads(line)) for line in lines[1:])
    return Journal(
        profile=profile_from_dict(header["profile"]),
        config=SimulationConfig.from_dict(header["config"]),
        opening=Opening.from_dict(header["opening"]),
        transactions=transactions,
        warnings=tuple(header.get("warnings", ())),
    )


def write_journal(journal: Journal, path: str | Path) -> None:
    Path(path).write_text(dumps_journal(journal), encoding="utf-8")


def read_journal(path: str | Path) -> Journal:
    return loads_journal(Path(path).read_text(encoding="utf-8"))


def with_transactions(journal: Journal, transactions: Iterable[Transaction]) -> Journal:
    return replace(journal, transactions=tuple(transactions))
