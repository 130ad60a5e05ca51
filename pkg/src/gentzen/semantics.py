"""Independent semantic checkers: truth tables and small-model search.

These are deliberately dumb and exhaustive; they exist so tests can
cross-check the rule engine against plain model-theoretic truth rather
than against itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .syntax import (
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Func,
    Imp,
    Not,
    Or,
    Pred,
    Sequent,
    Term,
    Var,
    is_closed,
    signature_of,
)


class NonPropositionalError(ValueError):
    """Input contains quantifiers, equality or non-nullary predicates."""


class EnumerationBudgetExceeded(RuntimeError):
    """Model search stopped because the interpretation space is too large."""

    def __init__(self, at_size: int, estimated: int, completed_sizes: int):
        super().__init__(
            f"enumerating domain size {at_size} would need {estimated} "
            f"interpretations; sizes up to {completed_sizes} were exhausted"
        )
        self.at_size = at_size
        self.estimated = estimated
        self.completed_sizes = completed_sizes


def _atoms(s: Sequent) -> list[str]:
    names: set[str] = set()
    for f in s.formulas():
        for sub in _walk(f):
            if isinstance(sub, Pred):
                if sub.args:
                    raise NonPropositionalError(
                        f"predicate {sub.name} has arguments"
                    )
                names.add(sub.name)
            elif isinstance(sub, Eq):
                raise NonPropositionalError("equality is not propositional")
            elif isinstance(sub, (Forall, Exists)):
                raise NonPropositionalError("quantifiers are not propositional")
    return sorted(names)


def _walk(f: Formula):
    yield f
    if isinstance(f, Not):
        yield from _walk(f.body)
    elif isinstance(f, (And, Or, Imp)):
        yield from _walk(f.left)
        yield from _walk(f.right)
    elif isinstance(f, (Forall, Exists)):
        yield from _walk(f.body)


def _eval_prop(f: Formula, env: dict[str, bool]) -> bool:
    if isinstance(f, Pred):
        return env[f.name]
    if isinstance(f, Not):
        return not _eval_prop(f.body, env)
    if isinstance(f, And):
        return _eval_prop(f.left, env) and _eval_prop(f.right, env)
    if isinstance(f, Or):
        return _eval_prop(f.left, env) or _eval_prop(f.right, env)
    if isinstance(f, Imp):
        return (not _eval_prop(f.left, env)) or _eval_prop(f.right, env)
    raise NonPropositionalError(f"unexpected formula {f!r}")


def prop_valid(s: Sequent) -> bool:
    """Truth-table validity: every row satisfying all of the antecedent
    satisfies some member of the succedent."""
    atoms = _atoms(s)
    for values in itertools.product((False, True), repeat=len(atoms)):
        env = dict(zip(atoms, values))
        if all(_eval_prop(f, env) for f in s.antecedent) and not any(
            _eval_prop(f, env) for f in s.succedent
        ):
            return False
    return True


# ------------------------------------------------------- finite models


@dataclass(frozen=True)
class Model:
    """A finite structure over domain {0..size-1}; equality is identity."""

    size: int
    funcs: dict[str, dict[tuple[int, ...], int]]
    preds: dict[str, frozenset[tuple[int, ...]]]


def _eval_term(t: Term, model: Model, env: dict[str, int]) -> int:
    if isinstance(t, Var):
        return env[t.name]
    assert isinstance(t, Func)
    args = tuple(_eval_term(a, model, env) for a in t.args)
    return model.funcs[t.name][args]


def _eval_fo(f: Formula, model: Model, env: dict[str, int]) -> bool:
    if isinstance(f, Pred):
        args = tuple(_eval_term(a, model, env) for a in f.args)
        return args in model.preds[f.name]
    if isinstance(f, Eq):
        return _eval_term(f.lhs, model, env) == _eval_term(f.rhs, model, env)
    if isinstance(f, Not):
        return not _eval_fo(f.body, model, env)
    if isinstance(f, And):
        return _eval_fo(f.left, model, env) and _eval_fo(f.right, model, env)
    if isinstance(f, Or):
        return _eval_fo(f.left, model, env) or _eval_fo(f.right, model, env)
    if isinstance(f, Imp):
        return (not _eval_fo(f.left, model, env)) or _eval_fo(f.right, model, env)
    if isinstance(f, Forall):
        return all(
            _eval_fo(f.body, model, {**env, f.var: d}) for d in range(model.size)
        )
    if isinstance(f, Exists):
        return any(
            _eval_fo(f.body, model, {**env, f.var: d}) for d in range(model.size)
        )
    raise TypeError(f"not a formula: {f!r}")


def holds_in(model: Model, s: Sequent) -> bool:
    """True unless the model makes all of Γ true and all of Δ false."""
    return not (
        all(_eval_fo(f, model, {}) for f in s.antecedent)
        and not any(_eval_fo(f, model, {}) for f in s.succedent)
    )


def _interpretation_count(sig, k: int) -> int:
    total = 1
    for ar in sig.funcs.values():
        total *= k ** (k**ar)
    for ar in sig.preds.values():
        total *= 2 ** (k**ar)
    return total


def falsify_small(
    s: Sequent, max_domain: int = 3, budget: int = 10_000_000
) -> Model | None:
    """Search exhaustively for a countermodel of size <= max_domain.

    Returns the first countermodel in enumeration order, or None when all
    interpretations up to the bound satisfy the sequent.  If a domain size
    would push the total number of interpretations past ``budget``, the
    search fails loudly instead of silently skipping it.
    """
    for f in s.formulas():
        if not is_closed(f):
            raise ValueError(f"sequent is not closed: free variable in {f}")
    sig = signature_of(s)
    func_names = sorted(sig.funcs)
    pred_names = sorted(sig.preds)
    spent = 0
    for k in range(1, max_domain + 1):
        count = _interpretation_count(sig, k)
        if spent + count > budget:
            raise EnumerationBudgetExceeded(k, count, k - 1)
        spent += count

        func_spaces = []
        for name in func_names:
            ar = sig.funcs[name]
            arg_tuples = list(itertools.product(range(k), repeat=ar))
            tables = [
                dict(zip(arg_tuples, values))
                for values in itertools.product(range(k), repeat=len(arg_tuples))
            ]
            func_spaces.append(tables)
        pred_spaces = []
        for name in pred_names:
            ar = sig.preds[name]
            arg_tuples = list(itertools.product(range(k), repeat=ar))
            relations = [
                frozenset(t for t, v in zip(arg_tuples, values) if v)
                for values in itertools.product((False, True), repeat=len(arg_tuples))
            ]
            pred_spaces.append(relations)

        for combo in itertools.product(*func_spaces, *pred_spaces):
            model = Model(
                k,
                dict(zip(func_names, combo[: len(func_names)])),
                dict(zip(pred_names, combo[len(func_names) :])),
            )
            if not holds_in(model, s):
                return model
    return None
