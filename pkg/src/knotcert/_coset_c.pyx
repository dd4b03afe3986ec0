# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled twin of _coset_py.hlt_enumerate.

Same algorithm, same definition order, same coincidence queue: the two
backends must produce bit-identical tables.  Any behavioral change here
must be mirrored in _coset_py.py (tests/test_kernels.py enforces this).
"""

import numpy as np

cdef long long UNDEF = -1


cdef class _Enum:
    cdef long long[:, ::1] table
    cdef long long[::1] p
    cdef long long[::1] queue
    cdef Py_ssize_t n_alloc, capacity, queue_len, max_cosets
    cdef int n_letters
    cdef bint changed
    cdef object table_arr, p_arr, queue_arr

    def __init__(self, int n_letters, Py_ssize_t max_cosets):
        cdef Py_ssize_t cap = 256
        if cap > max_cosets:
            cap = max_cosets
        if cap < 1:
            cap = 1
        self.n_letters = n_letters
        self.max_cosets = max_cosets
        self.capacity = cap
        self.table_arr = np.full((cap, n_letters), UNDEF, dtype=np.int64)
        self.p_arr = np.zeros(cap, dtype=np.int64)
        self.queue_arr = np.zeros(cap, dtype=np.int64)
        self.table = self.table_arr
        self.p = self.p_arr
        self.queue = self.queue_arr
        self.n_alloc = 1
        self.queue_len = 0
        self.changed = True

    cdef void _grow(self):
        cdef Py_ssize_t cap = self.capacity * 2
        if cap > self.max_cosets:
            cap = self.max_cosets
        new_table = np.full((cap, self.n_letters), UNDEF, dtype=np.int64)
        new_table[: self.n_alloc] = self.table_arr[: self.n_alloc]
        new_p = np.zeros(cap, dtype=np.int64)
        new_p[: self.n_alloc] = self.p_arr[: self.n_alloc]
        new_queue = np.zeros(cap, dtype=np.int64)
        self.table_arr, self.p_arr, self.queue_arr = new_table, new_p, new_queue
        self.table = new_table
        self.p = new_p
        self.queue = new_queue
        self.capacity = cap

    cdef long long rep(self, long long k):
        cdef long long l = k, tmp
        while self.p[l] != l:
            l = self.p[l]
        while self.p[k] != l:
            tmp = self.p[k]
            self.p[k] = l
            k = tmp
        return l

    cdef void merge(self, long long k, long long l):
        cdef long long t
        k = self.rep(k)
        l = self.rep(l)
        if k != l:
            if k > l:
                t = k
                k = l
                l = t
            self.p[l] = k
            self.queue[self.queue_len] = l
            self.queue_len += 1

    cdef void coincidence(self, long long a, long long b):
        cdef Py_ssize_t qi = 0
        cdef long long g, d, mu, nu
        cdef int x
        self.merge(a, b)
        while qi < self.queue_len:
            g = self.queue[qi]
            qi += 1
            for x in range(self.n_letters):
                d = self.table[g, x]
                if d == UNDEF:
                    continue
                self.table[d, x ^ 1] = UNDEF
                mu = self.rep(g)
                nu = self.rep(d)
                if self.table[mu, x] != UNDEF:
                    self.merge(nu, self.table[mu, x])
                elif self.table[nu, x ^ 1] != UNDEF:
                    self.merge(mu, self.table[nu, x ^ 1])
                else:
                    self.table[mu, x] = nu
                    self.table[nu, x ^ 1] = mu
        self.queue_len = 0

    cdef long long define(self, long long a, int x):
        cdef long long c = self.n_alloc
        if c >= self.capacity:
            self._grow()
        self.p[c] = c
        self.n_alloc += 1
        self.table[a, x] = c
        self.table[c, x ^ 1] = a
        self.changed = True
        return c

    cdef bint scan_and_fill(self, long long a, long long[::1] w):
        # returns False on coset overflow
        cdef long long f = a, b = a
        cdef Py_ssize_t i = 0, j = w.shape[0] - 1
        while True:
            while i <= j and self.table[f, w[i]] != UNDEF:
                f = self.rep(self.table[f, w[i]])
                i += 1
            if i > j:
                if f != b:
                    self.changed = True
                    self.coincidence(f, b)
                return True
            while j >= i and self.table[b, w[j] ^ 1] != UNDEF:
                b = self.rep(self.table[b, w[j] ^ 1])
                j -= 1
            if j < i:
                if f != b:
                    self.changed = True
                    self.coincidence(f, b)
                return True
            if i == j:
                self.table[f, w[i]] = b
                self.table[b, w[i] ^ 1] = f
                self.changed = True
                return True
            if self.n_alloc >= self.max_cosets:
                return False
            f = self.define(f, <int> w[i])
            i += 1


def hlt_enumerate(n_letters, relators, max_cosets):
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    cdef _Enum st = _Enum(n_letters, max_cosets)
    words = [np.asarray(w, dtype=np.int64) for w in relators]
    cdef long long a
    cdef int x
    cdef bint alive
    while st.changed:
        st.changed = False
        a = 0
        while a < st.n_alloc:
            if st.p[a] != a:
                a += 1
                continue
            alive = True
            for w in words:
                if not st.scan_and_fill(a, w):
                    return False, None, int(st.n_alloc)
                if st.rep(a) != a:
                    alive = False
                    break
            if alive:
                for x in range(st.n_letters):
                    if st.table[a, x] == UNDEF:
                        if st.n_alloc >= st.max_cosets:
                            return False, None, int(st.n_alloc)
                        st.define(a, x)
            a += 1

    live = [c for c in range(st.n_alloc) if st.p[c] == c]
    index = {c: k for k, c in enumerate(live)}
    final = [
        tuple(index[st.rep(st.table[c, x])] for x in range(st.n_letters)) for c in live
    ]
    return True, final, int(st.n_alloc)
