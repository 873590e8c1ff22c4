"""Pure-Python model enumeration, used when the compiled kernel is missing.

A program is a postfix list of ``(opcode, arg)`` pairs evaluated per model:

    0 EMPTY mask   push  model & mask == 0
    1 NOT          flip the top of the stack
    2 AND k        pop k values, push their conjunction
    3 OR k         pop k values, push their disjunction

The model is the integer whose bit k says minterm k is inhabited.
"""

from __future__ import annotations

from typing import Sequence


def _eval(ops: Sequence[int], args: Sequence[int], model: int) -> bool:
    stack: list[bool] = []
    for op, arg in zip(ops, args):
        if op == 0:
            stack.append(model & arg == 0)
        elif op == 1:
            stack[-1] = not stack[-1]
        elif op == 2:
            vals = stack[len(stack) - arg:]
            del stack[len(stack) - arg:]
            stack.append(all(vals))
        else:
            vals = stack[len(stack) - arg:]
            del stack[len(stack) - arg:]
            stack.append(any(vals))
    return stack[0]


def first_model(ops: Sequence[int], args: Sequence[int], n_models: int, start: int = 0) -> int:
    """Lowest model index in [start, n_models) satisfying the program, or -1."""
    for model in range(start, n_models):
        if _eval(ops, args, model):
            return model
    return -1


def count_models(ops: Sequence[int], args: Sequence[int], n_models: int) -> int:
    return sum(1 for model in range(n_models) if _eval(ops, args, model))
