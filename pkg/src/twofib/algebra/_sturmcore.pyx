# cython: language_level=3, boundscheck=False, wraparound=False
"""GMP-backed Sturm chain kernel.

Same algorithm and interface as twofib.algebra._sturmpure.SturmChain (signed
subresultant pseudo-remainder sequence); all coefficient arithmetic runs on
mpz_t, which is what makes chains on degree-hundreds polynomials with
hundred-digit coefficients fast.  Divisions by the Collins factors are
remainder-checked, raising ArithmeticError on any inexactness.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport strlen

cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef __mpz_struct mpz_t[1]
    void mpz_init(mpz_t x)
    void mpz_init_set(mpz_t rop, const mpz_t op)
    void mpz_init_set_si(mpz_t rop, long op)
    int mpz_init_set_str(mpz_t rop, const char *s, int base)
    void mpz_clear(mpz_t x)
    void mpz_set(mpz_t rop, const mpz_t op)
    void mpz_set_si(mpz_t rop, long op)
    void mpz_swap(mpz_t a, mpz_t b)
    void mpz_mul(mpz_t rop, const mpz_t a, const mpz_t b)
    void mpz_mul_si(mpz_t rop, const mpz_t a, long b)
    void mpz_addmul(mpz_t rop, const mpz_t a, const mpz_t b)
    void mpz_submul(mpz_t rop, const mpz_t a, const mpz_t b)
    void mpz_pow_ui(mpz_t rop, const mpz_t base, unsigned long exp)
    void mpz_neg(mpz_t rop, const mpz_t op)
    void mpz_tdiv_qr(mpz_t q, mpz_t r, const mpz_t n, const mpz_t d)
    void mpz_divexact(mpz_t q, const mpz_t n, const mpz_t d)
    int mpz_sgn(const mpz_t op)
    char *mpz_get_str(char *s, int base, const mpz_t op)
    void mp_get_memory_functions(
        void *(**alloc)(size_t),
        void *(**realloc_)(void *, size_t, size_t),
        void (**dealloc)(void *, size_t))

BACKEND = "gmp"


cdef int _mpz_from_pyint(mpz_t dst, obj) except -1:
    # hex round-trip: format() always yields a literal mpz_init_set_str accepts
    data = format(obj, "x").encode("ascii")
    cdef const char *s = data
    mpz_init_set_str(dst, s, 16)
    return 0


cdef object _pyint_from_mpz(mpz_t src):
    cdef char *s = mpz_get_str(NULL, 16, src)
    cdef void (*dealloc)(void *, size_t) noexcept
    try:
        return int(s.decode("ascii"), 16)
    finally:
        mp_get_memory_functions(NULL, NULL, &dealloc)
        dealloc(s, strlen(s) + 1)


cdef class SturmChain:
    """Signed subresultant Sturm chain of (p, p') over GMP integers."""

    cdef mpz_t **polys      # chain coefficients, ascending degree
    cdef int *lens          # coefficient counts per chain element
    cdef signed char *eps   # sign linking each element to the true chain
    cdef int nchain
    cdef int cap
    cdef public int degree

    def __cinit__(self, coeffs):
        cdef list cs = [int(c) for c in coeffs]
        while cs and cs[len(cs) - 1] == 0:
            cs.pop()
        cdef int n0 = len(cs)
        self.degree = n0 - 1
        self.nchain = 0
        self.cap = n0 + 2 if n0 > 0 else 1
        self.polys = <mpz_t **> malloc(self.cap * sizeof(mpz_t *))
        self.lens = <int *> malloc(self.cap * sizeof(int))
        self.eps = <signed char *> malloc(self.cap * sizeof(signed char))
        if self.polys == NULL or self.lens == NULL or self.eps == NULL:
            raise MemoryError()
        if n0 == 0:
            return
        self._build(cs, n0)

    cdef void _store(self, mpz_t *src, int n, int eps) except *:
        cdef mpz_t *dst = <mpz_t *> malloc(n * sizeof(mpz_t))
        cdef int i
        if dst == NULL:
            raise MemoryError()
        for i in range(n):
            mpz_init_set(dst[i], src[i])
        self.polys[self.nchain] = dst
        self.lens[self.nchain] = n
        self.eps[self.nchain] = <signed char> eps
        self.nchain += 1

    cdef void _build(self, list cs, int n0) except *:
        cdef int i, na, nb, delta, sign_beta, sign_c, eps_prev, eps_cur, eps_next
        cdef int nprem, j
        cdef mpz_t *A = <mpz_t *> malloc(n0 * sizeof(mpz_t))
        cdef mpz_t *B = <mpz_t *> malloc(n0 * sizeof(mpz_t))
        cdef mpz_t g, h, beta, t, t2, lc_r, q, rem
        if A == NULL or B == NULL:
            free(A)
            free(B)
            raise MemoryError()
        for i in range(n0):
            _mpz_from_pyint(A[i], cs[i])
            mpz_init(B[i])
        na = n0
        nb = 0
        for i in range(1, n0):
            mpz_mul_si(B[nb], A[i], i)
            nb += 1
        while nb and mpz_sgn(B[nb - 1]) == 0:
            nb -= 1
        mpz_init_set_si(g, 1)
        mpz_init_set_si(h, 1)
        mpz_init(beta)
        mpz_init(t)
        mpz_init(t2)
        mpz_init(lc_r)
        mpz_init(q)
        mpz_init(rem)
        try:
            self._store(A, na, 1)
            if na > 1 and nb > 0:
                self._store(B, nb, 1)
                eps_prev = 1
                eps_cur = 1
                while nb > 1:
                    delta = (na - 1) - (nb - 1)
                    # ---- pseudo-remainder of A by B, in place in A ---------
                    nprem = delta + 1
                    while na >= nb:
                        mpz_set(lc_r, A[na - 1])
                        nprem -= 1
                        for i in range(na - 1):
                            mpz_mul(A[i], A[i], B[nb - 1])
                        j = na - nb
                        for i in range(nb - 1):
                            mpz_submul(A[j + i], lc_r, B[i])
                        na -= 1
                        while na and mpz_sgn(A[na - 1]) == 0:
                            na -= 1
                        if na == 0:
                            break
                    if na == 0:
                        break  # remainder vanished: p was not square-free
                    if nprem > 0:
                        mpz_pow_ui(t, B[nb - 1], <unsigned long> nprem)
                        for i in range(na):
                            mpz_mul(A[i], A[i], t)
                    # ---- divide by Collins factor beta ---------------------
                    mpz_pow_ui(t, h, <unsigned long> delta)
                    mpz_mul(beta, g, t)
                    if delta % 2 == 0:
                        mpz_neg(beta, beta)
                    # divexact: divisibility is guaranteed by the subresultant
                    # theorem; the checked pure backend cross-validates in tests
                    for i in range(na):
                        mpz_divexact(A[i], A[i], beta)
                    sign_c = mpz_sgn(B[nb - 1])
                    sign_beta = mpz_sgn(beta)
                    if (delta + 1) % 2 == 0:
                        eps_next = -eps_prev * sign_beta
                    else:
                        eps_next = -eps_prev * sign_c * sign_beta
                    self._store(A, na, eps_next)
                    # ---- Collins bookkeeping -------------------------------
                    mpz_set(g, B[nb - 1])
                    if delta == 1:
                        mpz_set(h, g)
                    else:
                        mpz_pow_ui(t, g, <unsigned long> delta)
                        mpz_pow_ui(t2, h, <unsigned long> (delta - 1))
                        mpz_tdiv_qr(h, rem, t, t2)
                        if mpz_sgn(rem) != 0:
                            raise ArithmeticError("inexact Collins h update")
                    # ---- advance: (A, B) <- (B, remainder) -----------------
                    for i in range(nb):
                        mpz_swap(A[i], B[i])
                    na, nb = nb, na
                    eps_prev, eps_cur = eps_cur, eps_next
        finally:
            for i in range(n0):
                mpz_clear(A[i])
                mpz_clear(B[i])
            free(A)
            free(B)
            mpz_clear(g)
            mpz_clear(h)
            mpz_clear(beta)
            mpz_clear(t)
            mpz_clear(t2)
            mpz_clear(lc_r)
            mpz_clear(q)
            mpz_clear(rem)

    def __dealloc__(self):
        cdef int i, j
        if self.polys != NULL:
            for i in range(self.nchain):
                for j in range(self.lens[i]):
                    mpz_clear(self.polys[i][j])
                free(self.polys[i])
            free(self.polys)
        free(self.lens)
        free(self.eps)

    def __len__(self):
        return self.nchain

    def coefficient_rows(self):
        """Chain contents for debugging/cross-checks: list of (coeffs, eps)."""
        cdef int i, j
        out = []
        for i in range(self.nchain):
            row = []
            for j in range(self.lens[i]):
                row.append(_pyint_from_mpz(self.polys[i][j]))
            out.append((tuple(row), int(self.eps[i])))
        return out

    def variations_at(self, num, den):
        """Sign variations of the true Sturm chain at num/den, den > 0."""
        cdef mpz_t mnum, mden, acc, pw
        cdef int i, j, s, prev, var
        _mpz_from_pyint(mnum, num)
        _mpz_from_pyint(mden, den)
        mpz_init(acc)
        mpz_init(pw)
        var = 0
        prev = 0
        try:
            for i in range(self.nchain):
                mpz_set_si(acc, 0)
                mpz_set_si(pw, 1)
                for j in range(self.lens[i] - 1, -1, -1):
                    mpz_mul(acc, acc, mnum)
                    mpz_addmul(acc, self.polys[i][j], pw)
                    mpz_mul(pw, pw, mden)
                s = self.eps[i] * mpz_sgn(acc)
                if s != 0:
                    if prev != 0 and s != prev:
                        var += 1
                    prev = s
        finally:
            mpz_clear(mnum)
            mpz_clear(mden)
            mpz_clear(acc)
            mpz_clear(pw)
        return var

    def variations_pos_inf(self):
        cdef int i, s, prev, var
        var = 0
        prev = 0
        for i in range(self.nchain):
            s = self.eps[i] * mpz_sgn(self.polys[i][self.lens[i] - 1])
            if s != 0:
                if prev != 0 and s != prev:
                    var += 1
                prev = s
        return var

    def variations_neg_inf(self):
        cdef int i, s, prev, var
        var = 0
        prev = 0
        for i in range(self.nchain):
            s = self.eps[i] * mpz_sgn(self.polys[i][self.lens[i] - 1])
            if (self.lens[i] - 1) % 2 == 1:
                s = -s
            if s != 0:
                if prev != 0 and s != prev:
                    var += 1
                prev = s
        return var
