# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled model enumeration. Same program format as ``_mcpure``."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free


cdef bint _eval(const int* ops, const uint64_t* args, int n, uint64_t model, char* stack) noexcept nogil:
    cdef int sp = 0
    cdef int i, j, k
    cdef char acc
    for i in range(n):
        if ops[i] == 0:
            stack[sp] = (model & args[i]) == 0
            sp += 1
        elif ops[i] == 1:
            stack[sp - 1] = not stack[sp - 1]
        else:
            k = <int>args[i]
            if ops[i] == 2:
                acc = 1
                for j in range(sp - k, sp):
                    acc = acc and stack[j]
            else:
                acc = 0
                for j in range(sp - k, sp):
                    acc = acc or stack[j]
            sp -= k
            stack[sp] = acc
            sp += 1
    return stack[0]


cdef class _Program:
    cdef int n
    cdef int* ops
    cdef uint64_t* args
    cdef char* stack

    def __cinit__(self, ops, args):
        self.n = len(ops)
        self.ops = <int*>malloc(max(self.n, 1) * sizeof(int))
        self.args = <uint64_t*>malloc(max(self.n, 1) * sizeof(uint64_t))
        self.stack = <char*>malloc(max(self.n, 1) * sizeof(char))
        if not self.ops or not self.args or not self.stack:
            raise MemoryError()
        for i in range(self.n):
            self.ops[i] = ops[i]
            self.args[i] = args[i]

    def __dealloc__(self):
        free(self.ops)
        free(self.args)
        free(self.stack)


def first_model(ops, args, uint64_t n_models, uint64_t start=0):
    """Lowest model index in [start, n_models) satisfying the program, or -1."""
    cdef _Program prog = _Program(ops, args)
    cdef uint64_t model
    cdef long long found = -1
    with nogil:
        model = start
        while model < n_models:
            if _eval(prog.ops, prog.args, prog.n, model, prog.stack):
                found = <long long>model
                break
            model += 1
    return found


def count_models(ops, args, uint64_t n_models):
    cdef _Program prog = _Program(ops, args)
    cdef uint64_t model
    cdef uint64_t total = 0
    with nogil:
        model = 0
        while model < n_models:
            if _eval(prog.ops, prog.args, prog.n, model, prog.stack):
                total += 1
            model += 1
    return total
