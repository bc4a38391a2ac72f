"""Invoice-format rendering and seeded error injection with a ground-truth manifest.

Twelve error variants in three categories can be planted into a journal.
Record errors replace a field with a different valid value, calculation
errors break an intra-row arithmetic relation (amount vs quantity x price,
tax vs amount, profit vs amount - cost), and approval errors blank a
signer. Only the fields named in the returned manifest differ from the
input journal.
"""

from __future__ import annotations

import datetime as _dt
import random
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .core import Money, qty_parse
from .simulation import (
    EXPENSE_TYPES,
    Journal,
    PayMethod,
    PayStatus,
    SYSTEM_NAME,
    Transaction,
    TxType,
    derive_seed,
    with_transactions,
)


class ErrorCategory(str, Enum):
    RECORD = "Record Error"
    CALCULATION = "Calculation Error"
    APPROVAL = "Transaction Approval Mismatch"


class ErrorKind(str, Enum):
    TYPE_RECORD = "Transaction TYPE Record Error"
    DATE_RECORD = "Transaction DATE Record Error"
    PAYMENT_RECEIPT_STATUS_RECORD = (
        "Transaction PAYMENT/RECEIPT_STATUS Record Error")
    PAYMENT_METHOD_RECORD = "Transaction PAYMENT_METHOD Record Error"
    QUANTITY_RECORD = "Transaction QUANTITY Record Error"
    UNIT_PRICE_RECORD = "Transaction UNIT_PRICE Record Error"
    RECEIVE_METHOD_RECORD = "Transaction RECEIVE_METHOD Record Error"
    AMOUNT_CALC = "Transaction AMOUNT Calculation Error"
    TAX_AMOUNT_CALC = "Transaction TAX_AMOUNT Calculation Error"
    PROFIT_CALC = "Transaction PROFIT Calculation Error"
    MISSING_PREPARER = "Transaction Without PREPARER Error"
    MISSING_APPROVER = "Transaction Without APPROVER Error"


CATEGORIES: dict[ErrorKind, ErrorCategory] = {
    ErrorKind.TYPE_RECORD: ErrorCategory.RECORD,
    ErrorKind.DATE_RECORD: ErrorCategory.RECORD,
    ErrorKind.PAYMENT_RECEIPT_STATUS_RECORD: ErrorCategory.RECORD,
    ErrorKind.PAYMENT_METHOD_RECORD: ErrorCategory.RECORD,
    ErrorKind.QUANTITY_RECORD: ErrorCategory.RECORD,
    ErrorKind.UNIT_PRICE_RECORD: ErrorCategory.RECORD,
    ErrorKind.RECEIVE_METHOD_RECORD: ErrorCategory.RECORD,
    ErrorKind.AMOUNT_CALC: ErrorCategory.CALCULATION,
    ErrorKind.TAX_AMOUNT_CALC: ErrorCategory.CALCULATION,
    ErrorKind.PROFIT_CALC: ErrorCategory.CALCULATION,
    ErrorKind.MISSING_PREPARER: ErrorCategory.APPROVAL,
    ErrorKind.MISSING_APPROVER: ErrorCategory.APPROVAL,
}

FIELD_FOR_KIND: dict[ErrorKind, str] = {
    ErrorKind.TYPE_RECORD: "tx_type",
    ErrorKind.DATE_RECORD: "date",
    ErrorKind.PAYMENT_RECEIPT_STATUS_RECORD: "payment_receipt_status",
    ErrorKind.PAYMENT_METHOD_RECORD: "payment_method",
    ErrorKind.QUANTITY_RECORD: "quantity",
    ErrorKind.UNIT_PRICE_RECORD: "unit_price",
    ErrorKind.RECEIVE_METHOD_RECORD: "receive_method",
    ErrorKind.AMOUNT_CALC: "amount",
    ErrorKind.TAX_AMOUNT_CALC: "tax_amount",
    ErrorKind.PROFIT_CALC: "profit",
    ErrorKind.MISSING_PREPARER: "preparer",
    ErrorKind.MISSING_APPROVER: "approver",
}

_GOODS = (TxType.SALE, TxType.PURCHASE)
_HUMAN = _GOODS + (TxType.FIXED_ASSET_PURCHASE,) + EXPENSE_TYPES


def eligible(kind: ErrorKind, txn: Transaction) -> bool:
    t = txn.tx_type
    if kind is ErrorKind.TYPE_RECORD:
        return t in _GOODS or t in EXPENSE_TYPES
    if kind is ErrorKind.DATE_RECORD:
        return True
    if kind is ErrorKind.PAYMENT_RECEIPT_STATUS_RECORD:
        return txn.payment_receipt_status is not PayStatus.NA
    if kind is ErrorKind.PAYMENT_METHOD_RECORD:
        return txn.payment_method is not PayMethod.NA
    if kind is ErrorKind.QUANTITY_RECORD:
        return t in _GOODS
    if kind is ErrorKind.UNIT_PRICE_RECORD:
        return t in _GOODS
    if kind is ErrorKind.RECEIVE_METHOD_RECORD:
        return txn.receive_method is not PayMethod.NA
    if kind is ErrorKind.AMOUNT_CALC:
        return t in _GOODS
    if kind is ErrorKind.TAX_AMOUNT_CALC:
        return t is TxType.SALE
    if kind is ErrorKind.PROFIT_CALC:
        return t is TxType.SALE
    if kind in (ErrorKind.MISSING_PREPARER, ErrorKind.MISSING_APPROVER):
        return t in _HUMAN
    return False  # pragma: no cover


@dataclass(frozen=True)
class ManifestEntry:
    transaction_id: str
    field_name: str
    recorded_value: str
    original_value: str

    def to_dict(self) -> dict:
        return {
            "transaction_id": self.transaction_id,
            "field_name": self.field_name,
            "recorded_value": self.recorded_value,
            "original_value": self.original_value,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "ManifestEntry":
        return cls(doc["transaction_id"], doc["field_name"],
                   doc["recorded_value"], doc["original_value"])


@dataclass(frozen=True)
class ErrorManifest:
    entries: tuple[ManifestEntry, ...]

    def sorted_entries(self) -> tuple[ManifestEntry, ...]:
        return tuple(sorted(
            self.entries, key=lambda e: (e.transaction_id, e.field_name)))

    def to_dict(self) -> dict:
        return {"entries": [e.to_dict() for e in self.entries]}

    @classmethod
    def from_dict(cls, doc: dict) -> "ErrorManifest":
        return cls(tuple(ManifestEntry.from_dict(e) for e in doc["entries"]))


@dataclass(frozen=True)
class InjectionPlan:
    """What to plant: (kind, count) specs plus the seed that drives the draws.

    With ``colocate`` every spec must have count 1 and all errors land on a
    single shared transaction (the multi-error audit tasks); otherwise each
    error goes to a distinct transaction.
    """

    specs: tuple[tuple[ErrorKind, int], ...]
    seed: int
    colocate: bool = False


class InfeasiblePlanError(ValueError):
    def __init__(self, kind: Optional[ErrorKind], needed: int, available: int):
        what = kind.value if kind else "co-located error set"
        super().__init__(
            f"{what}: needs {needed} eligible transactions, {available} available")
        self.kind = kind
        self.needed = needed
        self.available = available


_SCALE_FACTORS = (Fraction(1, 10), Fraction(1, 2), Fraction(2), Fraction(10))


def _scaled_int(rng: random.Random, value: int) -> int:
    factor = rng.choice(_SCALE_FACTORS)
    scaled = round(value * factor)
    if scaled == value or scaled <= 0:
        scaled = value * 2
    return int(scaled)


def _different_choice(rng: random.Random, current, options):
    pool = [o for o in options if o != current]
    return rng.choice(pool)


def _mutate(kind: ErrorKind, txn: Transaction, rng: random.Random) -> Transaction:
    field = FIELD_FOR_KIND[kind]
    if kind is ErrorKind.TYPE_RECORD:
        if txn.tx_type in _GOODS:
            new = TxType.PURCHASE if txn.tx_type is TxType.SALE else TxType.SALE
        else:
            new = _different_choice(rng, txn.tx_type, EXPENSE_TYPES)
        return _with(txn, tx_type=new)
    if kind is ErrorKind.DATE_RECORD:
        shift = rng.randint(1, 30)
        return _with(txn, date=txn.date + _dt.timedelta(days=shift))
    if kind is ErrorKind.PAYMENT_RECEIPT_STATUS_RECORD:
        new = _different_choice(rng, txn.payment_receipt_status,
                                (PayStatus.PAID, PayStatus.RECEIVED,
                                 PayStatus.OUTSTANDING))
        return _with(txn, payment_receipt_status=new)
    if kind is ErrorKind.PAYMENT_METHOD_RECORD:
        new = _different_choice(rng, txn.payment_method,
                                (PayMethod.CASH, PayMethod.BANK_TRANSFER,
                                 PayMethod.CREDIT))
        return _with(txn, payment_method=new)
    if kind is ErrorKind.QUANTITY_RECORD:
        return _with(txn, quantity=_scaled_int(rng, txn.quantity))
    if kind is ErrorKind.UNIT_PRICE_RECORD:
        return _with(txn, unit_price=Money(_scaled_int(rng, txn.unit_price.cents)))
    if kind is ErrorKind.RECEIVE_METHOD_RECORD:
        new = _different_choice(rng, txn.receive_method,
                                (PayMethod.CASH, PayMethod.BANK_TRANSFER,
                                 PayMethod.CREDIT))
        return _with(txn, receive_method=new)
    if kind is ErrorKind.AMOUNT_CALC:
        return _with(txn, amount=Money(_scaled_int(rng, txn.amount.cents)))
    if kind is ErrorKind.TAX_AMOUNT_CALC:
        return _with(txn, tax_amount=Money(_scaled_int(rng, txn.tax_amount.cents)))
    if kind is ErrorKind.PROFIT_CALC:
        return _with(txn, profit=Money(_scaled_int(rng, txn.profit.cents)))
    if kind is ErrorKind.MISSING_PREPARER:
        return _with(txn, preparer="")
    if kind is ErrorKind.MISSING_APPROVER:
        return _with(txn, approver="")
    raise ValueError(f"unknown error kind {kind!r}")  # pragma: no cover


def _with(txn: Transaction, **changes) -> Transaction:
    from dataclasses import replace
    return replace(txn, **changes)


def inject(journal: Journal, plan: InjectionPlan) -> tuple[Journal, ErrorManifest]:
    """Plant the planned errors; returns the corrupted journal and its manifest."""
    for kind, count in plan.specs:
        if count < 1:
            raise InfeasiblePlanError(kind, count, 0)
    rng = random.Random(derive_seed(plan.seed, "inject"))
    transactions = list(journal.transactions)
    index = {txn.id: pos for pos, txn in enumerate(transactions)}
    assignments: list[tuple[ErrorKind, str]] = []

    if plan.colocate:
        if any(count != 1 for _, count in plan.specs):
            raise InfeasiblePlanError(None, 1, 0)
        kinds = [kind for kind, _ in plan.specs]
        fields = [FIELD_FOR_KIND[kind] for kind in kinds]
        if len(set(fields)) != len(fields):
            raise InfeasiblePlanError(None, 1, 0)  # one error per field
        shared = [t.id for t in transactions
                  if all(eligible(kind, t) for kind in kinds)]
        if not shared:
            raise InfeasiblePlanError(None, 1, 0)
        target = shared[rng.randrange(len(shared))]
        assignments = [(kind, target) for kind in kinds]
    else:
        used: set[str] = set()
        for kind, count in plan.specs:
            candidates = [t.id for t in transactions
                          if eligible(kind, t) and t.id not in used]
            if len(candidates) < count:
                raise InfeasiblePlanError(kind, count, len(candidates))
            for _ in range(count):
                pick = candidates.pop(rng.randrange(len(candidates)))
                used.add(pick)
                assignments.append((kind, pick))

    entries = []
    for kind, txn_id in assignments:
        pos = index[txn_id]
        original = transactions[pos]
        mutated = _mutate(kind, original, rng)
        field = FIELD_FOR_KIND[kind]
        entries.append(ManifestEntry(
            transaction_id=txn_id,
            field_name=field,
            recorded_value=mutated.to_record()[field],
            original_value=original.to_record()[field]))
        transactions[pos] = mutated

    return with_transactions(journal, transactions), ErrorManifest(tuple(entries))


def oracle_detect(corrupted: Journal, original: Journal) -> ErrorManifest:
    """Field-by-field diff between two journals sharing an id set."""
    original_by_id = {t.id: t for t in original.transactions}
    corrupted_ids = {t.id for t in corrupted.transactions}
    if corrupted_ids != set(original_by_id):
        raise ValueError("journals do not share the same transaction ids")
    entries = []
    for txn in corrupted.transactions:
        base = original_by_id[txn.id].to_record()
        rec = txn.to_record()
        for field, value in rec.items():
            if field == "id":
                continue
            if value != base[field]:
                entries.append(ManifestEntry(
                    transaction_id=txn.id, field_name=field,
                    recorded_value=value, original_value=base[field]))
    entries.sort(key=lambda e: (e.transaction_id, e.field_name))
    return ErrorManifest(tuple(entries))


# --- invoice-format text --------------------------------------------------------

_GOODS_TEMPLATE = (
    "Transaction {id}: On {date}, an invoice was issued for a {label}, "
    "consisting of {quantity} units at a unit price of {unit_price}, "
    "totaling {amount}. The cost amount for this transaction was "
    "{cost_amount}, yielding a profit of {profit}, with a tax amount of "
    "{tax_amount} leading to a total amount due of {total_amount}. "
    "The payment/receipt status is {status}, the payment method is "
    "{payment_method}, and the receive method is {receive_method}. "
    "This transaction was prepared by {preparer}, and the approver is "
    "{approver}."
)

_SIMPLE_TEMPLATE = (
    "Transaction {id}: On {date}, an invoice was issued for a {label}, "
    "totaling {amount}. The payment/receipt status is {status}, and the "
    "payment method is {payment_method}. This transaction was prepared by "
    "{preparer}, and the approver is {approver}."
)

_NOTICE_TEMPLATE = (
    "Transaction {id}: On {date}, an notice was issued for a {label}, "
    "leading to a total amount due of {amount}."
)

_GOODS_LABELS = {TxType.SALE: "sale", TxType.PURCHASE: "purchase"}
_SIMPLE_LABELS = {
    TxType.FIXED_ASSET_PURCHASE: "fixed asset purchase",
    TxType.ADMINISTRATIVE_EXPENSE: "administrative expense",
    TxType.SELLING_EXPENSE: "selling expense",
    TxType.FINANCIAL_EXPENSE: "financial expense",
}
_NOTICE_LABELS = {
    TxType.DEPRECIATION: "Depreciation",
    TxType.INTEREST_RECEIVABLE: "Interest Receivable",
    TxType.BANK_TO_CASH_TRANSFER: "Bank to Cash Transfer",
    TxType.CASH_TO_BANK_TRANSFER: "Cash to Bank Transfer",
}
_LABEL_TO_TYPE = {
    **{v: k for k, v in _GOODS_LABELS.items()},
    **{v: k for k, v in _SIMPLE_LABELS.items()},
    **{v: k for k, v in _NOTICE_LABELS.items()},
}


def render_invoice(txn: Transaction) -> str:
    """One fixed natural-language line per transaction type."""
    rec = txn.to_record()
    if txn.tx_type in _GOODS_LABELS:
        return _GOODS_TEMPLATE.format(
            id=rec["id"], date=rec["date"], label=_GOODS_LABELS[txn.tx_type],
            quantity=rec["quantity"], unit_price=rec["unit_price"],
            amount=rec["amount"], cost_amount=rec["cost_amount"],
            profit=rec["profit"], tax_amount=rec["tax_amount"],
            total_amount=rec["total_amount"],
            status=rec["payment_receipt_status"],
            payment_method=rec["payment_method"],
            receive_method=rec["receive_method"],
            preparer=rec["preparer"], approver=rec["approver"])
    if txn.tx_type in _SIMPLE_LABELS:
        return _SIMPLE_TEMPLATE.format(
            id=rec["id"], date=rec["date"], label=_SIMPLE_LABELS[txn.tx_type],
            amount=rec["amount"], status=rec["payment_receipt_status"],
            payment_method=rec["payment_method"],
            preparer=rec["preparer"], approver=rec["approver"])
    return _NOTICE_TEMPLATE.format(
        id=rec["id"], date=rec["date"], label=_NOTICE_LABELS[txn.tx_type],
        amount=rec["amount"])


_NUM = r"-?[0-9]+\.[0-9]{2}"
_GOODS_RE = re.compile(
    r"^Transaction (?P<id>\S+): On (?P<date>\d{4}-\d{2}-\d{2}), an invoice "
    r"was issued for a (?P<label>sale|purchase), consisting of "
    rf"(?P<quantity>{_NUM}) units at a unit price of (?P<unit_price>{_NUM}), "
    rf"totaling (?P<amount>{_NUM})\. The cost amount for this transaction "
    rf"was (?P<cost_amount>{_NUM}), yielding a profit of (?P<profit>{_NUM}), "
    rf"with a tax amount of (?P<tax_amount>{_NUM}) leading to a total amount "
    rf"due of (?P<total_amount>{_NUM})\. The payment/receipt status is "
    r"(?P<status>[^,]+), the payment method is (?P<payment_method>[^,]+), "
    r"and the receive method is (?P<receive_method>[^.]+)\. This transaction "
    r"was prepared by (?P<preparer>[^,]*), and the approver is "
    r"(?P<approver>[^.]*)\.$")
_SIMPLE_RE = re.compile(
    r"^Transaction (?P<id>\S+): On (?P<date>\d{4}-\d{2}-\d{2}), an invoice "
    r"was issued for a (?P<label>fixed asset purchase|administrative expense|"
    rf"selling expense|financial expense), totaling (?P<amount>{_NUM})\. "
    r"The payment/receipt status is (?P<status>[^,]+), and the payment "
    r"method is (?P<payment_method>[^.]+)\. This transaction was prepared "
    r"by (?P<preparer>[^,]*), and the approver is (?P<approver>[^.]*)\.$")
_NOTICE_RE = re.compile(
    r"^Transaction (?P<id>\S+): On (?P<date>\d{4}-\d{2}-\d{2}), an notice "
    r"was issued for a (?P<label>Depreciation|Interest Receivable|"
    r"Bank to Cash Transfer|Cash to Bank Transfer), leading to a total "
    rf"amount due of (?P<amount>{_NUM})\.$")


class InvoiceParseError(ValueError):
    pass


def parse_invoice(text: str) -> Transaction:
    """Inverse of render_invoice on any generated transaction line."""
    line = text.strip()
    match = _GOODS_RE.match(line)
    if match:
        g = match.groupdict()
        return Transaction(
            id=g["id"], date=_dt.date.fromisoformat(g["date"]),
            tx_type=_LABEL_TO_TYPE[g["label"]],
            quantity=qty_parse(g["quantity"]),
            unit_price=Money.parse(g["unit_price"]),
            amount=Money.parse(g["amount"]),
            tax_amount=Money.parse(g["tax_amount"]),
            total_amount=Money.parse(g["total_amount"]),
            cost_amount=Money.parse(g["cost_amount"]),
            profit=Money.parse(g["profit"]),
            payment_receipt_status=PayStatus(g["status"]),
            payment_method=PayMethod(g["payment_method"]),
            receive_method=PayMethod(g["receive_method"]),
            preparer=g["preparer"], approver=g["approver"])
    match = _SIMPLE_RE.match(line)
    if match:
        g = match.groupdict()
        amount = Money.parse(g["amount"])
        return Transaction(
            id=g["id"], date=_dt.date.fromisoformat(g["date"]),
            tx_type=_LABEL_TO_TYPE[g["label"]],
            quantity=0, unit_price=Money(0), amount=amount,
            tax_amount=Money(0), total_amount=amount, cost_amount=Money(0),
            profit=Money(0),
            payment_receipt_status=PayStatus(g["status"]),
            payment_method=PayMethod(g["payment_method"]),
            receive_method=PayMethod.NA,
            preparer=g["preparer"], approver=g["approver"])
    match = _NOTICE_RE.match(line)
    if match:
        g = match.groupdict()
        amount = Money.parse(g["amount"])
        return Transaction(
            id=g["id"], date=_dt.date.fromisoformat(g["date"]),
            tx_type=_LABEL_TO_TYPE[g["label"]],
            quantity=0, unit_price=Money(0), amount=amount,
            tax_amount=Money(0), total_amount=amount, cost_amount=Money(0),
            profit=Money(0), payment_receipt_status=PayStatus.NA,
            payment_method=PayMethod.NA, receive_method=PayMethod.NA,
            preparer=SYSTEM_NAME, approver=SYSTEM_NAME)
    raise InvoiceParseError(f"unrecognized invoice line: {line[:80]!r}")


def render_corpus(journal: Journal) -> str:
    """The whole journal as one invoice-format document, one line per record."""
    return "\n".join(render_invoice(t) for t in journal.transactions) + "\n"
