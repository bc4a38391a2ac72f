"""Static catalog of the 183 benchmark tasks (64/49/35/35 across domains).

Every row fixes a task's complexity coordinates (alpha = data items
touched, beta = input documents, gamma = output fields), its input
documents, its question text, and exactly gamma solution fields. The
literacy questions identify statement lines purely by their definitions;
the line names never appear in the question text.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .audit import ErrorKind
from .indicators import IndicatorId
from .statements import (
    BALANCE_SHEET_LINES,
    CASH_FLOW_LINES,
    INCOME_STATEMENT_LINES,
)


class Domain(str, Enum):
    FINANCIAL_LITERACY = "Financial Literacy"
    ACCOUNTING = "Accounting"
    AUDITING = "Auditing"
    CONSULTING = "Consulting"


class InputDoc(str, Enum):
    BALANCE_SHEET = "Balance Sheet"
    INCOME_STATEMENT = "Income Statement"
    CASH_FLOW_STATEMENT = "Cash Flow Statement"
    JOURNAL_TEXT = "Journal Text"
    CORRUPTED_JOURNAL_TEXT = "Corrupted Journal Text"


ALL_STATEMENTS = (InputDoc.BALANCE_SHEET, InputDoc.INCOME_STATEMENT,
                  InputDoc.CASH_FLOW_STATEMENT)

# Line labels, keyed by (statement, field); shared with the text renderer.
LABELS: dict[tuple[str, str], str] = {}
for _label, _attr, _style in BALANCE_SHEET_LINES:
    LABELS[("bs", _attr)] = _label
for _label, _attr, _style in INCOME_STATEMENT_LINES:
    LABELS[("is", _attr)] = _label
for _label, _attr, _style in CASH_FLOW_LINES:
    LABELS[("cfs", _attr)] = _label

# Definition-matching texts. These stand in for the line names in literacy
# questions, so none of them may contain the name they define.
DEFINITIONS: dict[tuple[str, str], str] = {
    ("bs", "cash_on_hand"):
        "cash held by an entity that is available for use in its "
        "day-to-day operations",
    ("bs", "bank_deposits"):
        "funds deposited into a bank or other financial institution",
    ("bs", "interest_receivable"):
        "amounts of interest accrued but not yet received",
    ("bs", "accounts_receivable"):
        "amounts owed to the entity for goods or services sold or "
        "provided on credit",
    ("bs", "inventory"):
        "assets held for sale in the ordinary course of business, in "
        "production for such sale, or in the process of being manufactured",
    ("bs", "total_current_assets"):
        "the total amount of assets that are expected to be realised or "
        "intended for sale or consumption in the normal course of the "
        "entity's operating cycle",
    ("bs", "fixed_assets"):
        "tangible items that are held for use in the production or supply "
        "of goods or services, for rental to others, or for administrative "
        "purposes",
    ("bs", "accumulated_depreciation"):
        "the cumulative amount of expense recognised against the entity's "
        "tangible assets in the statement of profit or loss and other "
        "comprehensive income",
    ("bs", "total_non_current_assets"):
        "the total amount of assets that are not expected to be realised "
        "or intended for sale or consumption in the normal course of the "
        "entity's operating cycle",
    ("bs", "total_assets"):
        "the total present economic resources controlled by the entity as "
        "a result of past events",
    ("bs", "accounts_payable"):
        "amounts owed by the entity for goods or services received or "
        "purchased on credit",
    ("bs", "taxes_payable"):
        "amounts of taxes accrued but not yet paid",
    ("bs", "total_current_liabilities"):
        "the total amount of liabilities that are expected to be settled "
        "in the normal course of the entity's operating cycle",
    ("bs", "paid_in_capital"):
        "capital contributed by shareholders in exchange for shares",
    ("bs", "retained_earnings"):
        "the amount of profit or loss retained in the entity, rather than "
        "being distributed to shareholders",
    ("bs", "total_owners_equity"):
        "the total amount of equity recognised in the statement of "
        "financial position",
    ("bs", "total_liabilities_and_equity"):
        "the total amount of liabilities and equity recognised in the "
        "statement of financial position",
    ("is", "main_business_revenue"):
        "income arising in the course of the entity's core operating "
        "activities",
    ("is", "total_revenue"):
        "total income arising in the course of an entity's ordinary "
        "activities",
    ("is", "cost_of_goods_sold"):
        "the carrying amount of inventories sold during the reporting "
        "period",
    ("is", "total_cost"):
        "the aggregate of all costs incurred by a company to generate its "
        "revenues during a specific accounting period",
    ("is", "gross_profit"):
        "the difference between total revenue and total cost for the "
        "period",
    ("is", "administrative_expenses"):
        "the costs of general management and administration of the entity "
        "as a whole",
    ("is", "selling_expenses"):
        "costs incurred to secure customer orders and to deliver the goods "
        "and services to customers",
    ("is", "depreciation"):
        "the systematic allocation of the depreciable amount of an asset "
        "over its useful life",
    ("is", "financial_expenses"):
        "financing costs incurred by an enterprise to raise funds needed "
        "for production and operation",
    ("is", "total_expenses"):
        "the total amount of operating outlays incurred by an entity "
        "during a reporting period",
    ("is", "interest_income"):
        "income earned by an entity from financial assets",
    ("is", "profit_before_tax"):
        "profit or loss for a period before deducting amounts owed to the "
        "tax authorities",
    ("is", "tax_expense"):
        "the total amount of taxes an entity is expected to pay or recover "
        "during a reporting period",
    ("is", "net_profit"):
        "the amount of profit an entity retains after all expenses, "
        "including operating costs, interest, taxes, depreciation, and "
        "amortization, have been deducted from total revenue",
    ("cfs", "net_profit"):
        "the amount of profit an entity retains after all expenses, "
        "including operating costs, interest, taxes, depreciation, and "
        "amortization, have been deducted from total revenue",
    ("cfs", "depreciation"):
        "the systematic allocation of the depreciable amount of an asset "
        "over its useful life",
    ("cfs", "delta_accounts_receivable"):
        "the change in the amounts owed to the entity for goods or "
        "services sold or provided on credit during the period",
    ("cfs", "delta_interest_receivable"):
        "the change in the amount of interest accrued but not yet received "
        "during the period",
    ("cfs", "delta_inventory"):
        "the change in the amount of assets held for sale in the ordinary "
        "course of business, in production for such sale, or in the "
        "process of being manufactured during the period",
    ("cfs", "total_delta_current_assets"):
        "the combined change over the period in the assets expected to be "
        "realised in the normal course of the entity's operating cycle",
    ("cfs", "delta_accounts_payable"):
        "the addition in the amount owed by the entity for goods or "
        "services received or purchased on credit during the period",
    ("cfs", "delta_tax_payable"):
        "the addition in the amount of taxes accrued but not yet paid "
        "during the period",
    ("cfs", "total_delta_current_liabilities"):
        "the combined change over the period in the obligations expected "
        "to be settled in the normal course of the entity's operating "
        "cycle",
    ("cfs", "net_operating_cash_flow"):
        "the total cash generated or used by a company's core business "
        "operations after accounting for all cash inflows and outflows "
        "within a specific period",
    ("cfs", "purchase_of_fixed_assets"):
        "cash payments to acquire property, plant and equipment and other "
        "long-term assets",
    ("cfs", "net_investing_cash_flow"):
        "the net amount of cash and cash equivalents generated from the "
        "acquisition and disposal of long-term assets and other "
        "investments not included in cash equivalents",
    ("cfs", "beginning_cash_balance"):
        "the amount of cash and cash equivalents at the beginning of the "
        "period",
    ("cfs", "ending_cash_balance"):
        "the amount of cash and cash equivalents at the end of the period",
    ("cfs", "net_increase"):
        "the net addition in the amount of cash and cash equivalents "
        "during the period",
}


@dataclass(frozen=True)
class LiteracySpec:
    mode: str  # "single" | "multi" | "decompose"
    items: tuple[tuple[str, str], ...] = ()
    main: Optional[tuple[str, str]] = None
    subs: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class AccountingSpec:
    ref: Optional[tuple[str, str]] = None
    whole: Optional[str] = None  # "bs" | "is" | "cfs"
    key_label: str = ""


@dataclass(frozen=True)
class SchemaField:
    label: str
    source: str  # "id" | "recorded" | "original" | "ctx_recorded" | "ctx_original"
    field: str = ""


@dataclass(frozen=True)
class AuditSpec:
    kinds: tuple[ErrorKind, ...]
    schema: tuple[SchemaField, ...]


@dataclass(frozen=True)
class ConsultingSpec:
    outputs: tuple[tuple[str, IndicatorId], ...]


@dataclass(frozen=True)
class CatalogRow:
    task_id: str
    domain: Domain
    name: str
    display_name: str
    alpha: int
    beta: int
    gamma: int
    inputs: tuple[InputDoc, ...]
    description: str
    spec: object
    forbidden_terms: tuple[str, ...] = ()

    def solution_schema(self) -> tuple[str, ...]:
        return _schema_for(self)


_DOC_PHRASE = {
    InputDoc.BALANCE_SHEET: "balance sheet",
    InputDoc.INCOME_STATEMENT: "income statement",
    InputDoc.CASH_FLOW_STATEMENT: "cash flow statement",
}


def _statement_phrase(inputs) -> str:
    if len(inputs) == 3:
        return "all three financial statements"
    return f"the {_DOC_PHRASE[inputs[0]]}"


def _numbered(definitions) -> str:
    return "; ".join(f"({i}) {d}" for i, d in enumerate(definitions, start=1))


_ORDER_NOTE = (
    " For multiple outputs, maintain the original line item order as shown "
    "in the input statement.")
_GROUP_NOTE = (
    " For multiple outputs, group them by financial statement in the "
    "following order: 1. Balance Sheet 2. Income Statement 3. Cash Flow "
    "Statement. Within each group, maintain the original line item order "
    "as shown in the input statement.")


def _schema_for(row: CatalogRow) -> tuple[str, ...]:
    spec = row.spec
    if isinstance(spec, LiteracySpec):
        if spec.mode == "single":
            if row.gamma == 2:
                return ("Initial Value", "Final Value")
            return ("Value",)
        if spec.mode == "multi":
            return tuple(f"Item {i}" for i in range(1, len(spec.items) + 1))
        # decompose
        if spec.main[0] == "bs":
            keys = ["Main Item (Final)"]
            for i in range(1, len(spec.subs) + 1):
                keys.append(f"Sub-item {i} (Initial)")
                keys.append(f"Sub-item {i} (Final)")
            return tuple(keys)
        return ("Main Item",) + tuple(
            f"Sub-item {i}" for i in range(1, len(spec.subs) + 1))
    if isinstance(spec, AccountingSpec):
        if spec.whole == "bs" or (spec.ref and spec.ref[0] == "bs"):
            return (f"{spec.key_label} (Initial)", f"{spec.key_label} (Final)")
        return (spec.key_label,)
    if isinstance(spec, AuditSpec):
        return tuple(f.label for f in spec.schema)
    if isinstance(spec, ConsultingSpec):
        return tuple(key for key, _ in spec.outputs)
    raise TypeError(f"unknown spec type {type(spec)!r}")  # pragma: no cover


# --- literacy rows -------------------------------------------------------------

_rows: list[CatalogRow] = []
_counters = {Domain.FINANCIAL_LITERACY: 0, Domain.ACCOUNTING: 0,
             Domain.AUDITING: 0, Domain.CONSULTING: 0}
_PREFIX = {Domain.FINANCIAL_LITERACY: "lit", Domain.ACCOUNTING: "acc",
           Domain.AUDITING: "aud", Domain.CONSULTING: "con"}


def _add(domain, name, display_name, alpha, beta, gamma, inputs, description,
         spec, forbidden=()):
    _counters[domain] += 1
    row = CatalogRow(
        task_id=f"{_PREFIX[domain]}-{_counters[domain]:03d}",
        domain=domain, name=name, display_name=display_name,
        alpha=alpha, beta=beta, gamma=gamma, inputs=tuple(inputs),
        description=description, spec=spec, forbidden_terms=tuple(forbidden))
    assert len(row.solution_schema()) == gamma, (name, row.solution_schema())
    assert len(row.inputs) == beta, (name, row.inputs)
    _rows.append(row)


_LIT_DISPLAY = "Financial Literacy Detection"


def _lit_single(ref, inputs, alpha, beta, gamma, name_item):
    definition = DEFINITIONS[ref]
    phrase = _statement_phrase(inputs)
    if gamma == 2:
        desc = (f"Based on {phrase}, identify and extract the specific line "
                f"item and value of {definition}, including initial and "
                f"final value. Report the initial value first and the final "
                f"value second.")
    else:
        tail = (" Report the final (end-of-period) value."
                if ref[0] == "bs" else "")
        desc = (f"Based on {phrase}, identify and extract the specific line "
                f"item and value of {definition}.{tail}")
    _add(Domain.FINANCIAL_LITERACY,
         f"Financial Literacy Detection-{name_item}", _LIT_DISPLAY,
         alpha, beta, gamma, inputs, desc,
         LiteracySpec(mode="single", items=(ref,)),
         forbidden=(LABELS[ref], name_item))


def _lit_multi(refs, inputs, alpha, beta, gamma, name_items):
    defs = [DEFINITIONS[r] for r in refs]
    phrase = _statement_phrase(inputs)
    note = _GROUP_NOTE if len(inputs) == 3 else _ORDER_NOTE
    desc = (f"Based on {phrase}, identify and extract the {len(refs)} "
            f"specific line items and values of: {_numbered(defs)}."
            f"{note} For each item, report its final (end-of-period) value.")
    name = "Financial Literacy Detection-" + " & ".join(name_items)
    forbidden = tuple(LABELS[r] for r in refs) + tuple(name_items)
    _add(Domain.FINANCIAL_LITERACY, name, _LIT_DISPLAY, alpha, beta, gamma,
         inputs, desc, LiteracySpec(mode="multi", items=tuple(refs)),
         forbidden=forbidden)


def _lit_decompose(main, subs, inputs, alpha, beta, gamma, name_item):
    definition = DEFINITIONS[main]
    phrase = _statement_phrase(inputs)
    if main[0] == "bs":
        tail = (" For the main item, output its final value; for each "
                "sub-item, output its initial and final values.")
    else:
        tail = " Output the main item's value and each sub-item's value."
    desc = (f"Based on {phrase}, identify and extract the specific line "
            f"item and value of {definition}, along with the relevant "
            f"financial data involved in the calculation. In addition, "
            f"decompose this item into {len(subs)} component sub-items, "
            f"all of which must also originate from the input statement, "
            f"keeping the original line item order.{tail}")
    _add(Domain.FINANCIAL_LITERACY,
         f"Financial Literacy Detection-{name_item}", _LIT_DISPLAY,
         alpha, beta, gamma, inputs, desc,
         LiteracySpec(mode="decompose", main=main, subs=tuple(subs)),
         forbidden=(LABELS[main], name_item))


_BS = (InputDoc.BALANCE_SHEET,)
_IS = (InputDoc.INCOME_STATEMENT,)
_CF = (InputDoc.CASH_FLOW_STATEMENT,)

# Balance sheet detection (19 rows).
for _ref, _item in (
        (("bs", "cash_on_hand"), "Cash on Hand"),
        (("bs", "bank_deposits"), "Bank Deposits"),
        (("bs", "accounts_receivable"), "Accounts Receivable"),
        (("bs", "interest_receivable"), "Interest Receivable"),
        (("bs", "inventory"), "Inventory"),
        (("bs", "fixed_assets"), "Fixed Assets"),
        (("bs", "accumulated_depreciation"), "Accumulated Depreciation"),
        (("bs", "accounts_payable"), "Accounts Payable"),
        (("bs", "taxes_payable"), "Taxes Payable"),
        (("bs", "paid_in_capital"), "Paid-in Capital"),
        (("bs", "retained_earnings"), "Retained Earnings"),
        (("bs", "total_current_assets"), "Current Assets"),
        (("bs", "total_non_current_assets"), "Non-current Assets"),
        (("bs", "total_current_liabilities"), "Current Liabilities"),
        (("bs", "total_owners_equity"), "Owner's Equity"),
):
    _lit_single(_ref, _BS, 2, 1, 2, _item)

_lit_decompose(("bs", "total_liabilities_and_equity"),
               (("bs", "paid_in_capital"), ("bs", "retained_earnings")),
               _BS, 5, 1, 5, "Total Liabilities and Owner's Equity")
_lit_multi((("bs", "accounts_receivable"), ("bs", "accounts_payable")),
           _BS, 2, 1, 2, ("Accounts Receivable", "Accounts Payable"))
_lit_multi((("bs", "cash_on_hand"), ("bs", "fixed_assets"),
            ("bs", "taxes_payable")),
           _BS, 3, 1, 3, ("Cash on Hand", "Fixed Assets", "Taxes Payable"))
_lit_multi((("bs", "interest_receivable"), ("bs", "accumulated_depreciation"),
            ("bs", "taxes_payable"), ("bs", "paid_in_capital")),
           _BS, 4, 1, 4,
           ("Interest Receivable", "Accumulated Depreciation",
            "Taxes Payable", "Paid-in Capital"))

# Income statement detection (16 rows).
for _ref, _item in (
        (("is", "cost_of_goods_sold"), "Cost of Goods Sold"),
        (("is", "main_business_revenue"), "Main Business Revenue"),
        (("is", "gross_profit"), "Gross Profit"),
        (("is", "interest_income"), "Interest Income"),
        (("is", "administrative_expenses"), "Administrative Expenses"),
        (("is", "selling_expenses"), "Selling Expenses"),
        (("is", "financial_expenses"), "Financial Expenses"),
        (("is", "depreciation"), "Accumulated Depreciation"),
        (("is", "tax_expense"), "Tax Expense"),
):
    _lit_single(_ref, _IS, 1, 1, 1, _item)

_lit_decompose(("is", "total_revenue"), (("is", "main_business_revenue"),),
               _IS, 2, 1, 2, "Total Revenue")
_lit_decompose(("is", "total_expenses"),
               (("is", "administrative_expenses"), ("is", "selling_expenses"),
                ("is", "depreciation"), ("is", "financial_expenses")),
               _IS, 5, 1, 5, "Total Expenses")
_lit_decompose(("is", "profit_before_tax"),
               (("is", "total_revenue"), ("is", "total_cost"),
                ("is", "total_expenses"), ("is", "interest_income")),
               _IS, 5, 1, 5, "Profit Before Tax")
_lit_decompose(("is", "net_profit"),
               (("is", "total_revenue"), ("is", "total_cost"),
                ("is", "total_expenses"), ("is", "interest_income"),
                ("is", "tax_expense")),
               _IS, 6, 1, 6, "Net Profit")
_lit_multi((("is", "main_business_revenue"), ("is", "cost_of_goods_sold")),
           _IS, 2, 1, 2, ("Main Business Revenue", "Cost of Goods Sold"))
_lit_multi((("is", "total_revenue"), ("is", "cost_of_goods_sold"),
            ("is", "administrative_expenses")),
           _IS, 3, 1, 3,
           ("Total Revenue", "Cost of Goods Sold", "Administrative Expenses"))
_lit_multi((("is", "selling_expenses"), ("is", "depreciation"),
            ("is", "financial_expenses"), ("is", "tax_expense")),
           _IS, 4, 1, 4,
           ("Selling Expenses", "Depreciation", "Financial Expenses",
            "Tax Expense"))

# Cash flow statement detection (15 rows).
for _ref, _item in (
        (("cfs", "net_profit"), "Net Profit"),
        (("cfs", "depreciation"), "Depreciation"),
        (("cfs", "delta_accounts_receivable"), "Decrease in Accounts Receivable"),
        (("cfs", "delta_inventory"), "Decrease in Inventory"),
        (("cfs", "delta_accounts_payable"), "Increase in Accounts Payable"),
        (("cfs", "delta_tax_payable"), "Increase in Taxes Payable"),
        (("cfs", "purchase_of_fixed_assets"), "Purchase of Fixed Assets"),
        (("cfs", "beginning_cash_balance"),
         "Beginning Cash and Cash Equivalents Balance"),
        (("cfs", "ending_cash_balance"),
         "Ending Cash and Cash Equivalents Balance"),
):
    _lit_single(_ref, _CF, 1, 1, 1, _item)

_lit_decompose(("cfs", "net_operating_cash_flow"),
               (("cfs", "net_profit"), ("cfs", "depreciation"),
                ("cfs", "delta_accounts_receivable"),
                ("cfs", "delta_interest_receivable"),
                ("cfs", "delta_inventory"),
                ("cfs", "total_delta_current_liabilities")),
               _CF, 7, 1, 7, "Net Cash Flow from Operating Activities")
_lit_decompose(("cfs", "net_investing_cash_flow"),
               (("cfs", "purchase_of_fixed_assets"),),
               _CF, 2, 1, 2, "Net Cash Flow from Investing Activities")
_lit_decompose(("cfs", "net_increase"),
               (("cfs", "net_operating_cash_flow"),
                ("cfs", "net_investing_cash_flow")),
               _CF, 3, 1, 3, "Net Increase in Cash and Cash Equivalents")
_lit_multi((("cfs", "net_profit"), ("cfs", "purchase_of_fixed_assets")),
           _CF, 2, 1, 2, ("Net Profit", "Purchase of Fixed Assets"))
_lit_multi((("cfs", "delta_accounts_payable"),
            ("cfs", "purchase_of_fixed_assets"),
            ("cfs", "beginning_cash_balance")),
           _CF, 3, 1, 3,
           ("Increase in Accounts Payable", "Purchase of Fixed Assets",
            "Beginning Cash Balance"))
_lit_multi((("cfs", "depreciation"), ("cfs", "delta_inventory"),
            ("cfs", "net_investing_cash_flow"), ("cfs", "net_increase")),
           _CF, 4, 1, 4,
           ("Depreciation", "Decrease in Inventory",
            "Net Cash Flow from Investing", "Net Increase"))

# Cross-statement detection (14 rows).
for _ref, _item in (
        (("bs", "interest_receivable"), "Interest Receivable"),
        (("bs", "paid_in_capital"), "Paid-in Capital"),
        (("is", "cost_of_goods_sold"), "Cost of Goods Sold"),
        (("is", "selling_expenses"), "Selling Expenses"),
        (("is", "tax_expense"), "Tax Expense"),
        (("is", "depreciation"), "Depreciation"),
        (("cfs", "delta_accounts_payable"), "Increase in Accounts Payable"),
        (("cfs", "beginning_cash_balance"),
         "Beginning Cash and Cash Equivalents Balance"),
):
    _lit_single(_ref, ALL_STATEMENTS, 1, 3, 1, _item)

_lit_multi((("bs", "interest_receivable"), ("cfs", "net_increase")),
           ALL_STATEMENTS, 2, 3, 2,
           ("Interest Receivable", "Net Increase in Cash"))
_lit_multi((("bs", "bank_deposits"), ("is", "interest_income")),
           ALL_STATEMENTS, 2, 3, 2, ("Bank Deposits", "Interest Income"))
_lit_multi((("is", "selling_expenses"), ("cfs", "purchase_of_fixed_assets")),
           ALL_STATEMENTS, 2, 3, 2,
           ("Selling Expenses", "Purchase of Fixed Assets"))
_lit_multi((("bs", "accounts_receivable"), ("is", "financial_expenses"),
            ("cfs", "purchase_of_fixed_assets")),
           ALL_STATEMENTS, 3, 3, 3,
           ("Accounts Receivable", "Financial Expenses", "Fixed Assets"))
_lit_multi((("bs", "taxes_payable"), ("is", "total_revenue"),
            ("cfs", "net_operating_cash_flow")),
           ALL_STATEMENTS, 3, 3, 3,
           ("Taxes Payable", "Revenue", "Operating Cash Flow"))
_lit_multi((("bs", "paid_in_capital"), ("is", "profit_before_tax"),
            ("cfs", "delta_accounts_payable")),
           ALL_STATEMENTS, 3, 3, 3,
           ("Paid-in Capital", "Profit Before Tax", "Accounts Payable"))


# --- accounting rows ------------------------------------------------------------

_J = (InputDoc.JOURNAL_TEXT,)
_ACC_TAIL = " Report each value as a number rounded to two decimal places."


def _acc(name_item, statement, ref_field, alpha, label=None):
    ref = (statement, ref_field)
    label = label or LABELS[ref]
    target = {"bs": "balance sheet", "is": "income statement",
              "cfs": "cash flow statement"}[statement]
    if statement == "bs":
        desc = (f"Based on the transaction records, calculate the "
                f"{label} item of the {target}, including both the initial "
                f"and final amounts.{_ACC_TAIL}")
    else:
        desc = (f"Based on the transaction records, calculate the final "
                f"{label} item of the {target}.{_ACC_TAIL}")
    prefix = {"bs": "Balance Sheet", "is": "Income Statement",
              "cfs": "Cash Flow Statement"}[statement]
    _add(Domain.ACCOUNTING, f"{prefix}-{name_item}", f"{prefix}-{name_item}",
         alpha, 1, 2 if statement == "bs" else 1, _J, desc,
         AccountingSpec(ref=ref, key_label=label))


def _acc_whole(statement, alpha):
    prefix, label = {
        "bs": ("Balance Sheet", "Balance Sheet"),
        "is": ("Income Statement", "Income Statement"),
        "cfs": ("Cash Flow Statement", "Cash Flow Statement"),
    }[statement]
    extra = ", including both the initial and final amounts" if statement == "bs" else ""
    desc = (f"Based on the transaction records, directly generate a complete "
            f"{label.lower()}{extra}. Return the statement as a JSON object "
            f"mapping each line item name to its value, in the original "
            f"line order.{_ACC_TAIL}")
    _add(Domain.ACCOUNTING, f"{prefix}-{label}", f"{prefix}-{label}",
         alpha, 1, 2 if statement == "bs" else 1, _J, desc,
         AccountingSpec(whole=statement, key_label=label))


_acc("Cash on Hand", "bs", "cash_on_hand", 1)
_acc("Bank Deposits", "bs", "bank_deposits", 1)
_acc("Inventory", "bs", "inventory", 1)
_acc("Accounts Receivable", "bs", "accounts_receivable", 1)
_acc("Interest Receivable", "bs", "interest_receivable", 1)
_acc("Current Assets", "bs", "total_current_assets", 5)
_acc("Accumulated Depreciation", "bs", "accumulated_depreciation", 1)
_acc("Fixed Assets net", "bs", "net_fixed_assets", 1)
_acc("Non-current Assets", "bs", "total_non_current_assets", 2)
_acc("Total Assets", "bs", "total_assets", 7)
_acc("Accounts Payable", "bs", "accounts_payable", 1)
_acc("Taxes Payable", "bs", "taxes_payable", 1)
_acc("Current Liabilities", "bs", "total_current_liabilities", 2)
_acc("Total Liabilities", "bs", "total_liabilities", 2)
_acc("Paid-in Capital", "bs", "paid_in_capital", 1)
_acc("Retained Earnings", "bs", "retained_earnings", 1)
_acc("Total Owner's Equity", "bs", "total_owners_equity", 2)
_acc("Total Liabilities and Owner's Equity", "bs",
     "total_liabilities_and_equity", 4)
_acc_whole("bs", 37)

_acc("Main Business Revenue", "is", "main_business_revenue", 1)
_acc("Total Revenue", "is", "total_revenue", 1)
_acc("Cost of Goods Sold", "is", "cost_of_goods_sold", 1)
_acc("Total Cost", "is", "total_cost", 1)
_acc("Gross Profit", "is", "gross_profit", 2)
_acc("Depreciation", "is", "depreciation", 1)
_acc("Administrative Expenses", "is", "administrative_expenses", 1)
_acc("Sales Expenses", "is", "selling_expenses", 1)
_acc("Financial Expenses", "is", "financial_expenses", 1)
_acc("Total Expenses", "is", "total_expenses", 4)
_acc("Interest Income", "is", "interest_income", 1)
_acc("Profit Before Tax", "is", "profit_before_tax", 7)
_acc("Tax Expense", "is", "tax_expense", 1)
_acc("Net Profit", "is", "net_profit", 8)
_acc_whole("is", 31)

# The source tables carry a second net-profit generation row under the cash
# flow statement with identical coordinates and value; the catalog keeps one.
_acc("Depreciation", "cfs", "depreciation", 1)
_acc("Accounts Receivable", "cfs", "delta_accounts_receivable", 1)
_acc("Interest Receivable", "cfs", "delta_interest_receivable", 1)
_acc("Inventory", "cfs", "delta_inventory", 1)
_acc("Total (Increase) Decrease in Current Assets", "cfs",
     "total_delta_current_assets", 1)
_acc("Accounts Payable", "cfs", "delta_accounts_payable", 1)
_acc("Tax Payable", "cfs", "delta_tax_payable", 14)
_acc("Total Increase (Decrease) in Current Liabilities", "cfs",
     "total_delta_current_liabilities", 1)
_acc("Net Cash Flow from Operating Activities", "cfs",
     "net_operating_cash_flow", 1)
_acc("Purchase of Fixed Assets", "cfs", "purchase_of_fixed_assets", 1)
_acc("Net Cash Flows from Investing Activities", "cfs",
     "net_investing_cash_flow", 1)
_acc("Beginning Cash and Cash Equivalents Balance", "cfs",
     "beginning_cash_balance", 2)
_acc("Ending Cash and Cash Equivalents Balance", "cfs",
     "ending_cash_balance", 2)
_acc("Net Increase", "cfs", "net_increase", 4)
_acc_whole("cfs", 38)


# --- auditing rows --------------------------------------------------------------

_CJ = (InputDoc.CORRUPTED_JOURNAL_TEXT,)
_AUDIT_DESC = (
    "Analyze each transaction entry and identify any internal "
    "inconsistencies or errors in the recorded information. Some fields, "
    "such as the invoice identifier, are generally considered more "
    "reliable due to their standardized and regulated nature. For each "
    "inconsistency you find, report the transaction ID, the incorrect "
    "fields' recorded values, and your best estimate of the correct "
    "values based on the other fields in that row. Follow the output "
    "schema shown in the example exactly.")

_ID = SchemaField("ID", "id")


def _pair(label, field_name):
    return (SchemaField(f"Recorded {label}", "recorded", field_name),
            SchemaField(f"Original {label}", "original", field_name))


def _orig(label, field_name):
    return SchemaField(f"Original {label}", "original", field_name)


def _ctx_preparer():
    return (SchemaField("Recorded Preparer", "ctx_recorded", "preparer"),
            SchemaField("Original Preparer", "ctx_original", "preparer"))


def _aud(name, alpha, beta, gamma, kinds, schema):
    _add(Domain.AUDITING, name, name, alpha, beta, gamma, _CJ, _AUDIT_DESC,
         AuditSpec(kinds=tuple(kinds), schema=tuple(schema)))


_K = ErrorKind

# Single-error tasks (12).
_aud("Find Record Error-Transaction TYPE Record Error", 13, 1, 3,
     [_K.TYPE_RECORD], (_ID, *_pair("Type", "tx_type")))
_aud("Find Record Error-Transaction DATE Record Error", 13, 1, 3,
     [_K.DATE_RECORD], (_ID, *_pair("Date", "date")))
_aud("Find Record Error-Transaction PAYMENT/RECEIPT_STATUS Record Error",
     13, 1, 3, [_K.PAYMENT_RECEIPT_STATUS_RECORD],
     (_ID, *_pair("Payment/Receipt Status", "payment_receipt_status")))
_aud("Find Record Error-Transaction PAYMENT_METHOD Record Error", 13, 1, 3,
     [_K.PAYMENT_METHOD_RECORD],
     (_ID, *_pair("Payment Method", "payment_method")))
_aud("Find Record Error-Transaction QUANTITY Record Error", 13, 1, 3,
     [_K.QUANTITY_RECORD], (_ID, *_pair("Quantity", "quantity")))
_aud("Find Record Error-Transaction UNIT_PRICE Record Error", 13, 1, 3,
     [_K.UNIT_PRICE_RECORD], (_ID, *_pair("Unit Price", "unit_price")))
_aud("Find Record Error-Transaction RECEIVE_METHOD Record Error", 13, 1, 3,
     [_K.RECEIVE_METHOD_RECORD],
     (_ID, *_pair("Receive Method", "receive_method")))
_aud("Find Calculation Error-Transaction AMOUNT Calculation Error", 13, 1, 3,
     [_K.AMOUNT_CALC], (_ID, *_pair("Amount", "amount")))
_aud("Find Calculation Error-Transaction TAX_AMOUNT Calculation Error",
     13, 1, 3, [_K.TAX_AMOUNT_CALC], (_ID, *_pair("Tax Amount", "tax_amount")))
_aud("Find Calculation Error-Transaction PROFIT Calculation Error", 13, 1, 2,
     [_K.PROFIT_CALC], (_ID, _orig("Profit", "profit")))
_aud("Find Transaction Approval Mismatch-Transaction Without PREPARER Error",
     13, 1, 2, [_K.MISSING_PREPARER], (_ID, _orig("Preparer", "preparer")))
_aud("Find Transaction Approval Mismatch-Transaction Without APPROVER Error",
     13, 1, 4, [_K.MISSING_APPROVER],
     (_ID, *_ctx_preparer(), _orig("Approver", "approver")))

# Double-error tasks (11); the single ID column means both errors share one
# transaction, and gamma follows the tables even where the listed output
# fields disagree with it.
_aud("Find Record Error-Transaction TYPE Record Error & Calculation "
     "Error-Transaction TAX_AMOUNT Calculation Error", 13, 1, 4,
     [_K.TYPE_RECORD, _K.TAX_AMOUNT_CALC],
     (_ID, *_pair("Type", "tx_type"), _orig("Tax Amount", "tax_amount")))
_aud("Find Record Error-Transaction PAYMENT/RECEIPT_STATUS Record Error & "
     "Record Error-Transaction QUANTITY Record Error", 13, 1, 4,
     [_K.PAYMENT_RECEIPT_STATUS_RECORD, _K.QUANTITY_RECORD],
     (_ID, *_pair("Payment/Receipt Status", "payment_receipt_status"),
      _orig("Quantity", "quantity")))
_aud("Find Record Error-Transaction QUANTITY Record Error & Record "
     "Error-Transaction TYPE Record Error", 13, 1, 4,
     [_K.QUANTITY_RECORD, _K.TYPE_RECORD],
     (_ID, *_pair("Quantity", "quantity"), _orig("Type", "tx_type")))
_aud("Find Record Error-Transaction PAYMENT/RECEIPT_STATUS Record Error & "
     "Calculation Error-Transaction AMOUNT Calculation Error", 13, 1, 5,
     [_K.PAYMENT_RECEIPT_STATUS_RECORD, _K.AMOUNT_CALC],
     (_ID, *_pair("Payment/Receipt Status", "payment_receipt_status"),
      *_pair("Amount", "amount")))
_aud("Find Record Error-Transaction RECEIVE_METHOD Record Error & Record "
     "Error-Transaction TYPE Record Error", 13, 1, 7,
     [_K.RECEIVE_METHOD_RECORD, _K.TYPE_RECORD],
     (_ID, *_pair("Receive Method", "receive_method"),
      *_pair("Type", "tx_type"), *_ctx_preparer()))
_aud("Find Error-TYPE MISCLASSIFICATION Error & RECORDING DELAY Error",
     13, 1, 5, [_K.TYPE_RECORD, _K.DATE_RECORD],
     (_ID, *_pair("Type", "tx_type"), *_pair("Date", "date")))
_aud("Find Error-TYPE MISCLASSIFICATION Error & PRICE ANOMALY Error",
     13, 1, 5, [_K.TYPE_RECORD, _K.UNIT_PRICE_RECORD],
     (_ID, *_pair("Type", "tx_type"), *_pair("Price", "unit_price")))
_aud("Find Error-TYPE MISCLASSIFICATION Error & AMOUNT DISCREPANCY Error",
     13, 1, 5, [_K.TYPE_RECORD, _K.AMOUNT_CALC],
     (_ID, *_pair("Type", "tx_type"), *_pair("Amount", "amount")))
_aud("Find Error-RECORDING DELAY Error & PRICE ANOMALY Error", 13, 1, 5,
     [_K.DATE_RECORD, _K.UNIT_PRICE_RECORD],
     (_ID, *_pair("Date", "date"), *_pair("Price", "unit_price")))
_aud("Find Error-RECORDING DELAY Error & AMOUNT DISCREPANCY Error", 13, 1, 5,
     [_K.DATE_RECORD, _K.AMOUNT_CALC],
     (_ID, *_pair("Date", "date"), *_pair("Amount", "amount")))
_aud("Find Error-PRICE ANOMALY Error & AMOUNT DISCREPANCY Error", 13, 1, 5,
     [_K.UNIT_PRICE_RECORD, _K.AMOUNT_CALC],
     (_ID, *_pair("Price", "unit_price"), *_pair("Amount", "amount")))

# Multi-error tasks (12).
_aud("Find Record Error-Transaction PAYMENT/RECEIPT_STATUS Record Error & "
     "Record Error-Transaction QUANTITY Record Error & Calculation "
     "Error-Transaction PROFIT Calculation Error", 13, 1, 5,
     [_K.PAYMENT_RECEIPT_STATUS_RECORD, _K.QUANTITY_RECORD, _K.PROFIT_CALC],
     (_ID, *_pair("Payment/Receipt Status", "payment_receipt_status"),
      _orig("Quantity", "quantity"), _orig("Profit", "profit")))
_aud("Find Error-TYPE MISCLASSIFICATION Error & RECORDING DELAY Error & "
     "PRICE ANOMALY Error", 13, 1, 7,
     [_K.TYPE_RECORD, _K.DATE_RECORD, _K.UNIT_PRICE_RECORD],
     (_ID, *_pair("Type", "tx_type"), *_pair("Date", "date"),
      *_pair("Price", "unit_price")))
_aud("Find Error-TYPE MISCLASSIFICATION Error & RECORDING DELAY Error & "
     "AMOUNT DISCREPANCY Error", 13, 1, 7,
     [_K.TYPE_RECORD, _K.DATE_RECORD, _K.AMOUNT_CALC],
     (_ID, *_pair("Type", "tx_type"), *_pair("Date", "date"),
      *_pair("Amount", "amount")))
_aud("Find Error-TYPE MISCLASSIFICATION Error & PRICE ANOMALY Error & "
     "AMOUNT DISCREPANCY Error", 13, 1, 7,
     [_K.TYPE_RECORD, _K.UNIT_PRICE_RECORD, _K.AMOUNT_CALC],
     (_ID, *_pair("Type", "tx_type"), *_pair("Price", "unit_price"),
      *_pair("Amount", "amount")))
_aud("Find Error-RECORDING DELAY Error & PRICE ANOMALY Error & AMOUNT "
     "DISCREPANCY Error", 13, 1, 7,
     [_K.DATE_RECORD, _K.UNIT_PRICE_RECORD, _K.AMOUNT_CALC],
     (_ID, *_pair("Date", "date"), *_pair("Price", "unit_price"),
      *_pair("Amount", "amount")))
_aud("Find Error-TAX Error & PRICE ANOMALY Error & AMOUNT DISCREPANCY "
     "Error & RECORDING DELAY Error", 13, 1, 9,
     [_K.TAX_AMOUNT_CALC, _K.UNIT_PRICE_RECORD, _K.AMOUNT_CALC,
      _K.DATE_RECORD],
     (_ID, *_pair("Tax", "tax_amount"), *_pair("Price", "unit_price"),
      *_pair("Amount", "amount"), *_pair("Date", "date")))
_aud("Find Error-TAX Error & PRICE ANOMALY Error & AMOUNT DISCREPANCY "
     "Error & TYPE MISCLASSIFICATION Error", 13, 1, 9,
     [_K.TAX_AMOUNT_CALC, _K.UNIT_PRICE_RECORD, _K.AMOUNT_CALC,
      _K.TYPE_RECORD],
     (_ID, *_pair("Tax", "tax_amount"), *_pair("Price", "unit_price"),
      *_pair("Amount", "amount"), *_pair("Type", "tx_type")))
_aud("Find Error-TAX Error & PRICE ANOMALY Error & AMOUNT DISCREPANCY "
     "Error & QUANTITY MISMATCH Error", 13, 1, 9,
     [_K.TAX_AMOUNT_CALC, _K.UNIT_PRICE_RECORD, _K.AMOUNT_CALC,
      _K.QUANTITY_RECORD],
     (_ID, *_pair("Tax", "tax_amount"), *_pair("Price", "unit_price"),
      *_pair("Amount", "amount"), *_pair("Quantity", "quantity")))
_aud("Find Error-PRICE ANOMALY Error & AMOUNT DISCREPANCY Error & "
     "RECORDING DELAY Error & QUANTITY MISMATCH Error", 13, 1, 9,
     [_K.UNIT_PRICE_RECORD, _K.AMOUNT_CALC, _K.DATE_RECORD,
      _K.QUANTITY_RECORD],
     (_ID, *_pair("Price", "unit_price"), *_pair("Amount", "amount"),
      *_pair("Date", "date"), *_pair("Quantity", "quantity")))
_aud("Find Error-TAX Error & PRICE ANOMALY Error & AMOUNT DISCREPANCY "
     "Error & RECORDING DELAY Error & TYPE MISCLASSIFICATION Error",
     13, 1, 11,
     [_K.TAX_AMOUNT_CALC, _K.UNIT_PRICE_RECORD, _K.AMOUNT_CALC,
      _K.DATE_RECORD, _K.TYPE_RECORD],
     (_ID, *_pair("Tax", "tax_amount"), *_pair("Price", "unit_price"),
      *_pair("Amount", "amount"), *_pair("Date", "date"),
      *_pair("Type", "tx_type")))
_aud("Find Error-TAX Error & PRICE ANOMALY Error & RECORDING DELAY Error & "
     "TYPE MISCLASSIFICATION Error & QUANTITY MISMATCH Error", 13, 1, 11,
     [_K.TAX_AMOUNT_CALC, _K.UNIT_PRICE_RECORD, _K.DATE_RECORD,
      _K.TYPE_RECORD, _K.QUANTITY_RECORD],
     (_ID, *_pair("Tax", "tax_amount"), *_pair("Price", "unit_price"),
      *_pair("Date", "date"), *_pair("Type", "tx_type"),
      *_pair("Quantity", "quantity")))
_aud("Find Error-PRICE ANOMALY Error & AMOUNT DISCREPANCY Error & "
     "RECORDING DELAY Error & TYPE MISCLASSIFICATION Error & QUANTITY "
     "MISMATCH Error", 13, 1, 11,
     [_K.UNIT_PRICE_RECORD, _K.AMOUNT_CALC, _K.DATE_RECORD, _K.TYPE_RECORD,
      _K.QUANTITY_RECORD],
     (_ID, *_pair("Price", "unit_price"), *_pair("Amount", "amount"),
      *_pair("Date", "date"), *_pair("Type", "tx_type"),
      *_pair("Quantity", "quantity")))


# --- consulting rows ------------------------------------------------------------

_I = IndicatorId
_CON_TAIL = (
    " Express percentage indicators with a percent sign; round every value "
    "half-up to two decimal places.")


def _con(name, alpha, beta, gamma, inputs, outputs):
    names = ", ".join(key for key, _ in outputs)
    phrase = _statement_phrase(inputs) if len(inputs) == 1 else \
        "the three financial statements"
    desc = (f"Based on {phrase}, calculate the following for the reporting "
            f"period: {names}.{_CON_TAIL}")
    _add(Domain.CONSULTING, name, name, alpha, beta, gamma, inputs, desc,
         ConsultingSpec(outputs=tuple(outputs)))


# Single-capability tasks (18). A task named for an alias keeps the alias
# as its solution key: Net Cash Ratio reports operating cash flow over net
# income, Current Liabilities Ratio reports the operating cash flow ratio,
# and the bare Turnover Ratio reports total asset turnover.
_con("Analyze Balance Sheet-Calculate Current Ratio", 2, 1, 1, _BS,
     [("Current Ratio", _I.CURRENT_RATIO)])
_con("Analyze Balance Sheet-Calculate Quick Ratio", 6, 1, 1, _BS,
     [("Quick Ratio", _I.QUICK_RATIO)])
_con("Analyze Balance Sheet-Calculate Debt to Asset Ratio", 2, 1, 1, _BS,
     [("Debt to Asset Ratio", _I.DEBT_TO_ASSET)])
_con("Analyze Balance Sheet-Calculate Debt to Equity Ratio", 2, 1, 1, _BS,
     [("Debt to Equity Ratio", _I.DEBT_TO_EQUITY)])
_con("Analyze Income Statement-Gross Profit Margin", 2, 1, 1, _IS,
     [("Gross Profit Margin", _I.GROSS_MARGIN)])
_con("Analyze Income Statement-Net Profit Margin", 2, 1, 1, _IS,
     [("Net Profit Margin", _I.NET_MARGIN)])
_con("Analyze Cash Flow Statement-FCF", 2, 1, 1, _CF,
     [("Free Cash Flow (FCF)", _I.FCF)])
_con("Analyze Cash Flow Statement-Net Cash Ratio", 2, 1, 1, _CF,
     [("Net Cash Ratio", _I.OCF_TO_NET_INCOME)])
_con("Analyze Financial Statement-Cash to Current Debt Ratio", 2, 1, 1, _BS,
     [("Cash to Current Debt Ratio", _I.CASH_TO_CURRENT_DEBT)])
_con("Analyze Financial Statement-Operating Cash Flow to Current "
     "Liabilities Ratio", 3, 3, 1, ALL_STATEMENTS,
     [("Operating Cash Flow to Current Liabilities Ratio",
       _I.OCF_TO_CURRENT_LIABILITIES)])
_con("Analyze Financial Statement-ROA", 3, 3, 1, ALL_STATEMENTS,
     [("Return on Assets (ROA)", _I.ROA)])
_con("Analyze Financial Statement-ROE", 3, 3, 1, ALL_STATEMENTS,
     [("Return on Equity (ROE)", _I.ROE)])
_con("Analyze Financial Statement-Inventory Turnover Ratio", 3, 3, 1,
     ALL_STATEMENTS, [("Inventory Turnover Ratio", _I.INVENTORY_TURNOVER)])
_con("Analyze Financial Statement-Accounts Receivable Turnover Ratio",
     3, 3, 1, ALL_STATEMENTS,
     [("Accounts Receivable Turnover Ratio", _I.AR_TURNOVER)])
_con("Analyze Financial Statement-Current Assets Turnover Ratio", 3, 3, 1,
     ALL_STATEMENTS,
     [("Current Assets Turnover Ratio", _I.CURRENT_ASSETS_TURNOVER)])
_con("Analyze Financial Statement-Total Asset Turnover Ratio", 3, 3, 1,
     ALL_STATEMENTS,
     [("Total Asset Turnover Ratio", _I.TOTAL_ASSET_TURNOVER)])
_con("Analyze Financial Statement-Cash Flow to Debt Ratio", 2, 3, 1,
     ALL_STATEMENTS, [("Cash Flow to Debt Ratio", _I.CASH_FLOW_TO_DEBT)])
_con("Analyze Financial Statement-Operating Cash Flow Ratio", 2, 3, 1,
     ALL_STATEMENTS, [("Operating Cash Flow Ratio", _I.OCF_RATIO)])

# Multi-capability tasks (17).
_con("Analyze Financial Statement-Current Ratio & Inventory Turnover Ratio",
     5, 3, 2, ALL_STATEMENTS,
     [("Current Ratio", _I.CURRENT_RATIO),
      ("Inventory Turnover Ratio", _I.INVENTORY_TURNOVER)])
_con("Analyze Financial Statement-Gross Profit Margin & Operating Cash "
     "Flow Ratio", 4, 3, 2, ALL_STATEMENTS,
     [("Gross Profit Margin", _I.GROSS_MARGIN),
      ("Operating Cash Flow Ratio", _I.OCF_RATIO)])
_con("Analyze Financial Statement-FCF & Current Assets Turnover Ratio",
     5, 3, 2, ALL_STATEMENTS,
     [("Free Cash Flow (FCF)", _I.FCF),
      ("Current Assets Turnover Ratio", _I.CURRENT_ASSETS_TURNOVER)])
_con("Analyze Financial Statement-Quick Ratio & Net Profit Margin", 8, 3, 2,
     ALL_STATEMENTS,
     [("Quick Ratio", _I.QUICK_RATIO), ("Net Profit Margin", _I.NET_MARGIN)])
_con("Analyze Financial Statement-Gross Profit Margin & Current "
     "Liabilities Ratio", 4, 3, 2, ALL_STATEMENTS,
     [("Gross Profit Margin", _I.GROSS_MARGIN),
      ("Current Liabilities Ratio", _I.OCF_RATIO)])
_con("Analyze Financial Statement-Debt to Asset Ratio & Net Cash Ratio",
     4, 3, 2, ALL_STATEMENTS,
     [("Debt to Asset Ratio", _I.DEBT_TO_ASSET),
      ("Net Cash Ratio", _I.OCF_TO_NET_INCOME)])
_con("Analyze Financial Statement-Debt to Equity Ratio & Net Profit "
     "Margin & Operating Cash Flow to Current Liabilities Ratio", 6, 3, 3,
     ALL_STATEMENTS,
     [("Debt to Equity Ratio", _I.DEBT_TO_EQUITY),
      ("Net Profit Margin", _I.NET_MARGIN),
      ("Operating Cash Flow to Current Liabilities Ratio",
       _I.OCF_TO_CURRENT_LIABILITIES)])
_con("Analyze Financial Statement-ROE & Debt to Asset Ratio & Gross "
     "Profit Margin", 7, 3, 3, ALL_STATEMENTS,
     [("Return on Equity (ROE)", _I.ROE),
      ("Debt to Asset Ratio", _I.DEBT_TO_ASSET),
      ("Gross Profit Margin", _I.GROSS_MARGIN)])
_con("Analyze Financial Statement-Net Cash Ratio & Turnover Ratio & "
     "Quick Ratio", 11, 3, 3, ALL_STATEMENTS,
     [("Net Cash Ratio", _I.OCF_TO_NET_INCOME),
      ("Turnover Ratio", _I.TOTAL_ASSET_TURNOVER),
      ("Quick Ratio", _I.QUICK_RATIO)])
_con("Analyze Financial Statement-Debt to Asset Ratio & Gross Profit "
     "Margin & Operating Cash Flow Ratio", 6, 3, 3, ALL_STATEMENTS,
     [("Debt to Asset Ratio", _I.DEBT_TO_ASSET),
      ("Gross Profit Margin", _I.GROSS_MARGIN),
      ("Operating Cash Flow Ratio", _I.OCF_RATIO)])
_con("Analyze Financial Statement-Debt to Equity Ratio & Net Profit "
     "Margin & ROA & Accounts Receivable Turnover Ratio", 10, 3, 4,
     ALL_STATEMENTS,
     [("Debt to Equity Ratio", _I.DEBT_TO_EQUITY),
      ("Net Profit Margin", _I.NET_MARGIN),
      ("Return on Assets (ROA)", _I.ROA),
      ("Accounts Receivable Turnover Ratio", _I.AR_TURNOVER)])
_con("Analyze Financial Statement-Current Ratio & Quick Ratio & Debt to "
     "Asset Ratio & Debt to Equity Ratio & Cash Flow to Debt Ratio",
     14, 3, 5, ALL_STATEMENTS,
     [("Current Ratio", _I.CURRENT_RATIO),
      ("Quick Ratio", _I.QUICK_RATIO),
      ("Debt to Asset Ratio", _I.DEBT_TO_ASSET),
      ("Debt to Equity Ratio", _I.DEBT_TO_EQUITY),
      ("Cash Flow to Debt Ratio", _I.CASH_FLOW_TO_DEBT)])
_con("Analyze Financial Statement-Accounts Receivable Turnover Ratio & "
     "Operating Cash Flow to Current Liabilities Ratio & Operating Cash "
     "Flow Ratio & Total Asset Turnover Ratio & Debt to Equity Ratio",
     12, 3, 5, ALL_STATEMENTS,
     [("Accounts Receivable Turnover Ratio", _I.AR_TURNOVER),
      ("Operating Cash Flow to Current Liabilities Ratio",
       _I.OCF_TO_CURRENT_LIABILITIES),
      ("Operating Cash Flow Ratio", _I.OCF_RATIO),
      ("Total Asset Turnover Ratio", _I.TOTAL_ASSET_TURNOVER),
      ("Debt to Equity Ratio", _I.DEBT_TO_EQUITY)])
_con("Analyze Financial Statement-FCF & ROA & ROE & Net Cash Ratio & Net "
     "Profit Margin & Gross Profit Margin", 14, 3, 6, ALL_STATEMENTS,
     [("Free Cash Flow (FCF)", _I.FCF),
      ("Return on Assets (ROA)", _I.ROA),
      ("Return on Equity (ROE)", _I.ROE),
      ("Net Cash Ratio", _I.OCF_TO_NET_INCOME),
      ("Net Profit Margin", _I.NET_MARGIN),
      ("Gross Profit Margin", _I.GROSS_MARGIN)])
_con("Analyze Financial Statement-Operating Cash Flow Ratio & Cash Flow "
     "to Debt Ratio & Inventory Turnover Ratio & Debt to Equity Ratio & "
     "Quick Ratio & Current Ratio", 17, 3, 6, ALL_STATEMENTS,
     [("Operating Cash Flow Ratio", _I.OCF_RATIO),
      ("Cash Flow to Debt Ratio", _I.CASH_FLOW_TO_DEBT),
      ("Inventory Turnover Ratio", _I.INVENTORY_TURNOVER),
      ("Debt to Equity Ratio", _I.DEBT_TO_EQUITY),
      ("Quick Ratio", _I.QUICK_RATIO),
      ("Current Ratio", _I.CURRENT_RATIO)])
_con("Analyze Financial Statement-Operating Cash Flow to Current "
     "Liabilities Ratio & Debt to Equity Ratio & Total Asset Turnover "
     "Ratio & Quick Ratio & Operating Cash Flow Ratio & ROE & Accounts "
     "Receivable Turnover Ratio", 21, 3, 7, ALL_STATEMENTS,
     [("Operating Cash Flow to Current Liabilities Ratio",
       _I.OCF_TO_CURRENT_LIABILITIES),
      ("Debt to Equity Ratio", _I.DEBT_TO_EQUITY),
      ("Total Asset Turnover Ratio", _I.TOTAL_ASSET_TURNOVER),
      ("Quick Ratio", _I.QUICK_RATIO),
      ("Operating Cash Flow Ratio", _I.OCF_RATIO),
      ("Return on Equity (ROE)", _I.ROE),
      ("Accounts Receivable Turnover Ratio", _I.AR_TURNOVER)])
_con("Analyze Financial Statement-Current Ratio & Gross Profit Margin & "
     "Debt to Asset Ratio & Net Profit Margin & Cash to Current Debt "
     "Ratio & FCF & ROA", 15, 3, 7, ALL_STATEMENTS,
     [("Current Ratio", _I.CURRENT_RATIO),
      ("Gross Profit Margin", _I.GROSS_MARGIN),
      ("Debt to Asset Ratio", _I.DEBT_TO_ASSET),
      ("Net Profit Margin", _I.NET_MARGIN),
      ("Cash to Current Debt Ratio", _I.CASH_TO_CURRENT_DEBT),
      ("Free Cash Flow (FCF)", _I.FCF),
      ("Return on Assets (ROA)", _I.ROA)])


CATALOG: tuple[CatalogRow, ...] = tuple(_rows)

EXPECTED_COUNTS = {
    Domain.FINANCIAL_LITERACY: 64,
    Domain.ACCOUNTING: 49,
    Domain.AUDITING: 35,
    Domain.CONSULTING: 35,
}

CATALOG_NOTES = {
    "accounting_rows": (
        "The per-statement generation tables contain 50 rows; the second "
        "net-profit row (under the cash flow statement, identical "
        "coordinates and value to the income-statement row) is merged so "
        "the accounting domain holds its contractual 49 tasks."),
    "aliases": (
        "Net Cash Ratio resolves to Operating Cash Flow to Net Income "
        "Ratio; Current Liabilities Ratio resolves to Operating Cash Flow "
        "Ratio; a bare Turnover Ratio resolves to Total Asset Turnover "
        "Ratio."),
    "audit_schemas": (
        "Multi-error tasks place all errors on one shared transaction "
        "(single ID output column). Where a table row's listed output "
        "fields disagree with its gamma, the schema keeps the ID and the "
        "Original values first and pads with preparer context, so the "
        "field count always equals gamma."),
}


def catalog_rows(domain: Optional[Domain] = None) -> tuple[CatalogRow, ...]:
    if domain is None:
        return CATALOG
    return tuple(row for row in CATALOG if row.domain is domain)
