"""Compile the three statements from a journal and keep them articulated.

The balance sheet carries an initial and an end column; the income and
cash-flow statements cover the simulated period. Cash-flow working-capital
lines are stored with their cash-effect sign (an asset build-up is
negative), which is also how the text renderer prints them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields as dc_fields
from .core import ZERO, Money
from .simulation import Journal, PayMethod, Transaction, TxType


class JournalReplayError(RuntimeError):
    """Replaying the journal drove a balance negative."""

    def __init__(self, transaction_id: str, balance: str):
        super().__init__(f"{balance} negative after {transaction_id}")
        self.transaction_id = transaction_id
        self.balance = balance


@dataclass(frozen=True)
class BalanceSheetColumn:
    cash_on_hand: Money
    bank_deposits: Money
    interest_receivable: Money
    accounts_receivable: Money
    inventory: Money
    total_current_assets: Money
    fixed_assets: Money
    accumulated_depreciation: Money  # contra-asset, stored <= 0
    net_fixed_assets: Money
    total_non_current_assets: Money
    total_assets: Money
    accounts_payable: Money
    taxes_payable: Money
    total_current_liabilities: Money
    total_liabilities: Money
    paid_in_capital: Money
    retained_earnings: Money
    total_owners_equity: Money
    total_liabilities_and_equity: Money


@dataclass(frozen=True)
class BalanceSheet:
    initial: BalanceSheetColumn
    end: BalanceSheetColumn


@dataclass(frozen=True)
class IncomeStatement:
    main_business_revenue: Money
    total_revenue: Money
    cost_of_goods_sold: Money
    total_cost: Money
    gross_profit: Money
    administrative_expenses: Money
    selling_expenses: Money
    depreciation: Money
    financial_expenses: Money
    total_expenses: Money
    interest_income: Money
    profit_before_tax: Money
    tax_expense: Money
    net_profit: Money


@dataclass(frozen=True)
class CashFlowStatement:
    net_profit: Money
    depreciation: Money
    delta_accounts_receivable: Money  # cash effect: asset growth is negative
    delta_interest_receivable: Money
    delta_inventory: Money
    total_delta_current_assets: Money
    delta_accounts_payable: Money
    delta_tax_payable: Money
    total_delta_current_liabilities: Money
    net_operating_cash_flow: Money
    purchase_of_fixed_assets: Money
    net_investing_cash_flow: Money
    beginning_cash_balance: Money
    ending_cash_balance: Money
    net_increase: Money


@dataclass(frozen=True)
class StatementSet:
    balance_sheet: BalanceSheet
    income_statement: IncomeStatement
    cash_flow_statement: CashFlowStatement
    provenance: str = ""


def _column(cash, bank, interest_recv, ar, inventory, fixed, accum_dep,
            ap, taxes, paid_in, retained) -> BalanceSheetColumn:
    total_current = cash + bank + interest_recv + ar + inventory
    net_fixed = fixed + accum_dep
    total_assets = total_current + net_fixed
    total_cl = ap + taxes
    total_oe = paid_in + retained
    return BalanceSheetColumn(
        cash_on_hand=cash, bank_deposits=bank,
        interest_receivable=interest_recv, accounts_receivable=ar,
        inventory=inventory, total_current_assets=total_current,
        fixed_assets=fixed, accumulated_depreciation=accum_dep,
        net_fixed_assets=net_fixed, total_non_current_assets=net_fixed,
        total_assets=total_assets, accounts_payable=ap, taxes_payable=taxes,
        total_current_liabilities=total_cl, total_liabilities=total_cl,
        paid_in_capital=paid_in, retained_earnings=retained,
        total_owners_equity=total_oe,
        total_liabilities_and_equity=total_cl + total_oe)


class _Replay:
    """Single pass over the journal accumulating every statement input."""

    def __init__(self, journal: Journal):
        opening = journal.opening
        self.cash = opening.cash
        self.bank = opening.bank
        self.accounts_receivable = ZERO
        self.interest_receivable = ZERO
        self.inventory = ZERO
        self.fixed_assets = opening.fixed_assets
        self.accounts_payable = ZERO
        self.taxes_payable = ZERO
        self.revenue = ZERO
        self.cogs = ZERO
        self.administrative = ZERO
        self.selling = ZERO
        self.financial = ZERO
        self.depreciation = ZERO
        self.interest_income = ZERO
        self.tax_expense = ZERO
        self.fixed_asset_purchases = ZERO

    def post(self, txn: Transaction) -> None:
        kind = txn.tx_type
        if kind is TxType.SALE:
            self.revenue = self.revenue + txn.amount
            self.cogs = self.cogs + txn.cost_amount
            self.inventory = self.inventory - txn.cost_amount
            self.taxes_payable = self.taxes_payable + txn.tax_amount
            self.tax_expense = self.tax_expense + txn.tax_amount
            self._receive(txn.receive_method, txn.amount)
        elif kind is TxType.PURCHASE:
            self.inventory = self.inventory + txn.amount
            self._pay(txn.payment_method, txn.amount, credit_account="ap")
        elif kind is TxType.FIXED_ASSET_PURCHASE:
            self.fixed_assets = self.fixed_assets + txn.amount
            self.fixed_asset_purchases = self.fixed_asset_purchases + txn.amount
            self._pay(txn.payment_method, txn.amount)
        elif kind is TxType.ADMINISTRATIVE_EXPENSE:
            self.administrative = self.administrative + txn.amount
            self._pay(txn.payment_method, txn.amount)
        elif kind is TxType.SELLING_EXPENSE:
            self.selling = self.selling + txn.amount
            self._pay(txn.payment_method, txn.amount)
        elif kind is TxType.FINANCIAL_EXPENSE:
            self.financial = self.financial + txn.amount
            self._pay(txn.payment_method, txn.amount)
        elif kind is TxType.DEPRECIATION:
            self.depreciation = self.depreciation + txn.amount
        elif kind is TxType.INTEREST_RECEIVABLE:
            self.interest_receivable = self.interest_receivable + txn.amount
            self.interest_income = self.interest_income + txn.amount
        elif kind is TxType.BANK_TO_CASH_TRANSFER:
            self.bank = self.bank - txn.amount
            self.cash = self.cash + txn.amount
        elif kind is TxType.CASH_TO_BANK_TRANSFER:
            self.cash = self.cash - txn.amount
            self.bank = self.bank + txn.amount
        else:  # pragma: no cover - exhaustive over TxType
            raise ValueError(f"unhandled transaction type {kind}")

    def _receive(self, method: PayMethod, amount: Money) -> None:
        if method is PayMethod.CREDIT:
            self.accounts_receivable = self.accounts_receivable + amount
        elif method is PayMethod.CASH:
            self.cash = self.cash + amount
        else:
            self.bank = self.bank + amount

    def _pay(self, method: PayMethod, amount: Money, credit_account=None) -> None:
        if method is PayMethod.CREDIT:
            if credit_account != "ap":
                raise ValueError("credit payment outside accounts payable")
            self.accounts_payable = self.accounts_payable + amount
        elif method is PayMethod.CASH:
            self.cash = self.cash - amount
        else:
            self.bank = self.bank - amount

    def check_non_negative(self, txn_id: str) -> None:
        for name in ("cash", "bank", "inventory"):
            if getattr(self, name).is_negative():
                raise JournalReplayError(txn_id, name)


def compile(journal: Journal) -> StatementSet:  # noqa: A001 - domain verb
    """Replay the journal once and produce the articulated statement set."""
    opening = journal.opening
    replay = _Replay(journal)
    for txn in journal.transactions:
        replay.post(txn)
        replay.check_non_negative(txn.id)

    income = _income_statement(replay)
    initial = _column(
        opening.cash, opening.bank, ZERO, ZERO, ZERO,
        opening.fixed_assets, ZERO, ZERO, ZERO,
        opening.paid_in_capital, ZERO)
    end = _column(
        replay.cash, replay.bank, replay.interest_receivable,
        replay.accounts_receivable, replay.inventory,
        replay.fixed_assets, -replay.depreciation,
        replay.accounts_payable, replay.taxes_payable,
        opening.paid_in_capital, income.net_profit)
    cash_flow = _cash_flow_statement(replay, income, initial, end)
    return StatementSet(
        balance_sheet=BalanceSheet(initial=initial, end=end),
        income_statement=income,
        cash_flow_statement=cash_flow,
        provenance=journal.digest())


def _income_statement(replay: _Replay) -> IncomeStatement:
    total_expenses = (replay.administrative + replay.selling
                      + replay.depreciation + replay.financial)
    gross = replay.revenue - replay.cogs
    pbt = gross - total_expenses + replay.interest_income
    return IncomeStatement(
        main_business_revenue=replay.revenue,
        total_revenue=replay.revenue,
        cost_of_goods_sold=replay.cogs,
        total_cost=replay.cogs,
        gross_profit=gross,
        administrative_expenses=replay.administrative,
        selling_expenses=replay.selling,
        depreciation=replay.depreciation,
        financial_expenses=replay.financial,
        total_expenses=total_expenses,
        interest_income=replay.interest_income,
        profit_before_tax=pbt,
        tax_expense=replay.tax_expense,
        net_profit=pbt - replay.tax_expense)


def _cash_flow_statement(replay, income, initial, end) -> CashFlowStatement:
    delta_ar = -(end.accounts_receivable - initial.accounts_receivable)
    delta_ir = -(end.interest_receivable - initial.interest_receivable)
    delta_inv = -(end.inventory - initial.inventory)
    total_dca = delta_ar + delta_ir + delta_inv
    delta_ap = end.accounts_payable - initial.accounts_payable
    delta_tax = end.taxes_payable - initial.taxes_payable
    total_dcl = delta_ap + delta_tax
    operating = (income.net_profit + income.depreciation
                 + total_dca + total_dcl)
    investing = -replay.fixed_asset_purchases
    beginning = initial.cash_on_hand + initial.bank_deposits
    net_increase = operating + investing
    return CashFlowStatement(
        net_profit=income.net_profit,
        depreciation=income.depreciation,
        delta_accounts_receivable=delta_ar,
        delta_interest_receivable=delta_ir,
        delta_inventory=delta_inv,
        total_delta_current_assets=total_dca,
        delta_accounts_payable=delta_ap,
        delta_tax_payable=delta_tax,
        total_delta_current_liabilities=total_dcl,
        net_operating_cash_flow=operating,
        purchase_of_fixed_assets=replay.fixed_asset_purchases,
        net_investing_cash_flow=investing,
        beginning_cash_balance=beginning,
        ending_cash_balance=beginning + net_increase,
        net_increase=net_increase)


# --- consistency checks ---------------------------------------------------------

_CENT = Money(1)


def _within(a: Money, b: Money, tolerance: Money = _CENT) -> bool:
    return abs(a - b) <= tolerance


def identity_check(statements: StatementSet) -> list[str]:
    """Violations of the intra-statement identities (empty when clean)."""
    violations = []
    bs, inc, cfs = (statements.balance_sheet, statements.income_statement,
                    statements.cash_flow_statement)
    for label, col in (("initial", bs.initial), ("end", bs.end)):
        if col.total_assets != col.total_current_assets + col.total_non_current_assets:
            violations.append(f"balance sheet {label}: total assets != current + non-current")
        if col.total_liabilities_and_equity != col.total_liabilities + col.total_owners_equity:
            violations.append(f"balance sheet {label}: liabilities+equity total broken")
        if not _within(col.total_assets, col.total_liabilities_and_equity):
            violations.append(
                f"balance sheet {label}: assets {col.total_assets} != "
                f"liabilities+equity {col.total_liabilities_and_equity}")
    if inc.gross_profit != inc.total_revenue - inc.total_cost:
        violations.append("income statement: gross profit != revenue - cost")
    if inc.net_profit != inc.profit_before_tax - inc.tax_expense:
        violations.append("income statement: net profit != pbt - tax")
    if cfs.net_increase != cfs.net_operating_cash_flow + cfs.net_investing_cash_flow:
        violations.append("cash flow: net increase != operating + investing")
    if cfs.ending_cash_balance != cfs.beginning_cash_balance + cfs.net_increase:
        violations.append("cash flow: ending != beginning + net increase")
    return violations


def articulation_check(statements: StatementSet,
                       tolerance: Money = _CENT) -> list[str]:
    """Violations of the links tying the three statements together."""
    violations = []
    bs, inc, cfs = (statements.balance_sheet, statements.income_statement,
                    statements.cash_flow_statement)
    if cfs.net_profit != inc.net_profit:
        violations.append(
            f"net profit: income statement {inc.net_profit} != "
            f"cash flow {cfs.net_profit}")
    re_delta = bs.end.retained_earnings - bs.initial.retained_earnings
    if not _within(re_delta, inc.net_profit, tolerance):
        violations.append(
            f"retained earnings: delta {re_delta} != net profit {inc.net_profit}")
    cash_end = bs.end.cash_on_hand + bs.end.bank_deposits
    if not _within(cfs.ending_cash_balance, cash_end, tolerance):
        violations.append(
            f"ending cash: cash flow {cfs.ending_cash_balance} != "
            f"balance sheet cash+bank {cash_end}")
    delta_lines = (
        ("accounts receivable", -cfs.delta_accounts_receivable,
         bs.end.accounts_receivable - bs.initial.accounts_receivable),
        ("interest receivable", -cfs.delta_interest_receivable,
         bs.end.interest_receivable - bs.initial.interest_receivable),
        ("inventory", -cfs.delta_inventory,
         bs.end.inventory - bs.initial.inventory),
        ("accounts payable", cfs.delta_accounts_payable,
         bs.end.accounts_payable - bs.initial.accounts_payable),
        ("tax payable", cfs.delta_tax_payable,
         bs.end.taxes_payable - bs.initial.taxes_payable),
    )
    for name, cfs_delta, bs_delta in delta_lines:
        if not _within(cfs_delta, bs_delta, tolerance):
            violations.append(
                f"{name}: cash-flow delta {cfs_delta} != balance-sheet delta {bs_delta}")
    return violations


# --- rendering and parsing -------------------------------------------------------

def _plain(value: Money) -> str:
    return str(value)


def _parens(value: Money) -> str:
    if value.is_negative():
        return f"({-value})"
    return str(value)


def _expense_style(value: Money) -> str:
    # Cost and expense sections print bracketed magnitudes.
    if value > ZERO:
        return f"({value})"
    return _parens(value)


BALANCE_SHEET_LINES = (
    ("Cash on Hand", "cash_on_hand", _plain),
    ("Bank Deposits", "bank_deposits", _plain),
    ("Interest Receivable", "interest_receivable", _plain),
    ("Accounts Receivable", "accounts_receivable", _plain),
    ("Inventory", "inventory", _plain),
    ("Total Current Assets", "total_current_assets", _plain),
    ("Fixed Assets", "fixed_assets", _plain),
    ("Accumulated Depreciation", "accumulated_depreciation", _parens),
    ("Net Fixed Assets", "net_fixed_assets", _plain),
    ("Total Non-Current Assets", "total_non_current_assets", _plain),
    ("Total Assets", "total_assets", _plain),
    ("Accounts Payable", "accounts_payable", _plain),
    ("Taxes Payable", "taxes_payable", _plain),
    ("Total Current Liabilities", "total_current_liabilities", _plain),
    ("Total Liabilities", "total_liabilities", _plain),
    ("Paid-in Capital", "paid_in_capital", _plain),
    ("Retained Earnings", "retained_earnings", _plain),
    ("Total Owner's Equity", "total_owners_equity", _plain),
    ("Total Liabilities and Equity", "total_liabilities_and_equity", _plain),
)

INCOME_STATEMENT_LINES = (
    ("Main Business Revenue", "main_business_revenue", _plain),
    ("Total Revenue", "total_revenue", _plain),
    ("Cost of Goods Sold", "cost_of_goods_sold", _expense_style),
    ("Total Cost", "total_cost", _expense_style),
    ("Gross Profit", "gross_profit", _plain),
    ("Administrative Expenses", "administrative_expenses", _expense_style),
    ("Selling Expenses", "selling_expenses", _expense_style),
    ("Depreciation", "depreciation", _expense_style),
    ("Financial Expenses", "financial_expenses", _expense_style),
    ("Total Expenses", "total_expenses", _expense_style),
    ("Interest Income", "interest_income", _plain),
    ("Profit Before Tax", "profit_before_tax", _plain),
    ("Tax Expense", "tax_expense", _plain),
    ("Net Profit", "net_profit", _plain),
)

CASH_FLOW_LINES = (
    ("Net Profit", "net_profit", _plain),
    ("Depreciation", "depreciation", _plain),
    ("Accounts Receivable", "delta_accounts_receivable", _parens),
    ("Interest Receivable", "delta_interest_receivable", _parens),
    ("Inventory", "delta_inventory", _parens),
    ("Total (Increase) Decrease in Current Assets",
     "total_delta_current_assets", _parens),
    ("Accounts Payable", "delta_accounts_payable", _parens),
    ("Tax Payable", "delta_tax_payable", _parens),
    ("Total Increase (Decrease) in Current Liabilities",
     "total_delta_current_liabilities", _parens),
    ("Net Cash Flow From Operations", "net_operating_cash_flow", _plain),
    ("Purchase of Fixed Assets", "purchase_of_fixed_assets", _plain),
    ("Net Cash Flows from Investing Activities",
     "net_investing_cash_flow", _parens),
    ("Beginning Cash and Cash Equivalents Balance",
     "beginning_cash_balance", _plain),
    ("Ending Cash and Cash Equivalents Balance",
     "ending_cash_balance", _plain),
    ("Net Increase", "net_increase", _parens),
)

_LABEL_WIDTH = 48


def _rule(char: str = "-") -> str:
    return char * (_LABEL_WIDTH + 30)


def render_balance_sheet(sheet: BalanceSheet) -> str:
    lines = ["BALANCE SHEET", _rule("="),
             f"{'Item':<{_LABEL_WIDTH}}{'Initial Amount':>15}{'End Amount':>15}",
             _rule()]
    for label, attr, style in BALANCE_SHEET_LINES:
        initial = style(getattr(sheet.initial, attr))
        end = style(getattr(sheet.end, attr))
        lines.append(f"{label:<{_LABEL_WIDTH}}{initial:>15}{end:>15}")
    lines.append(_rule("="))
    return "\n".join(lines)


def _render_single_column(title: str, statement, spec) -> str:
    lines = [title, _rule("="), f"{'Item':<{_LABEL_WIDTH}}{'Amount':>30}", _rule()]
    for label, attr, style in spec:
        lines.append(f"{label:<{_LABEL_WIDTH}}{style(getattr(statement, attr)):>30}")
    lines.append(_rule("="))
    return "\n".join(lines)


def render_income_statement(statement: IncomeStatement) -> str:
    return _render_single_column("INCOME STATEMENT", statement,
                                 INCOME_STATEMENT_LINES)


def render_cash_flow_statement(statement: CashFlowStatement) -> str:
    return _render_single_column("CASH FLOW STATEMENT", statement,
                                 CASH_FLOW_LINES)


def render_text(statements: StatementSet) -> str:
    return "\n\n".join([
        render_balance_sheet(statements.balance_sheet),
        render_income_statement(statements.income_statement),
        render_cash_flow_statement(statements.cash_flow_statement),
    ]) + "\n"


def _dataclass_to_strs(value) -> dict:
    return {f.name: str(getattr(value, f.name)) for f in dc_fields(value)}


def statements_to_dict(statements: StatementSet) -> dict:
    return {
        "balance_sheet": {
            "initial": _dataclass_to_strs(statements.balance_sheet.initial),
            "end": _dataclass_to_strs(statements.balance_sheet.end),
        },
        "income_statement": _dataclass_to_strs(statements.income_statement),
        "cash_flow_statement": _dataclass_to_strs(statements.cash_flow_statement),
        "provenance": statements.provenance,
    }


def _strs_to_dataclass(cls, doc: dict):
    return cls(**{f.name: Money.parse(doc[f.name]) for f in dc_fields(cls)})


def statements_from_dict(doc: dict) -> StatementSet:
    return StatementSet(
        balance_sheet=BalanceSheet(
            initial=_strs_to_dataclass(BalanceSheetColumn,
                                       doc["balance_sheet"]["initial"]),
            end=_strs_to_dataclass(BalanceSheetColumn,
                                   doc["balance_sheet"]["end"]),
        ),
        income_statement=_strs_to_dataclass(IncomeStatement,
                                            doc["income_statement"]),
        cash_flow_statement=_strs_to_dataclass(CashFlowStatement,
                                               doc["cash_flow_statement"]),
        provenance=doc.get("provenance", ""),
    )


def render(statements: StatementSet, format: str = "text-table") -> str:
    """Render as a human-readable table or a structured JSON document."""
    if format == "text-table":
        return render_text(statements)
    if format == "structured":
        return json.dumps(statements_to_dict(statements), indent=2) + "\n"
    raise ValueError(f"unknown render format {format!r}")


def parse_structured(text: str) -> StatementSet:
    return statements_from_dict(json.loads(text))
