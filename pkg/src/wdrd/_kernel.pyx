# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled orientation-search kernel.

Same contract and identical output as `_kernel_py.search_run`; see that
module for the pipeline description.  Limits: n <= 64 vertices (bitmask
reachability) and 39 edges (3^|E| must fit in a signed 64-bit counter).
"""

from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport free, malloc

BACKEND = "compiled"

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef int FWD = 0
cdef int BWD = 1
cdef int DIG = 2


cdef class _Ctx:
    cdef int n, ne, npairs
    cdef bint prune, use_reversal
    cdef int* eu
    cdef int* ev
    cdef u64* out_m
    cdef u64* in_m
    cdef int* dd
    cdef int* oo
    cdef int* ii
    cdef int* pair_d
    cdef int* pair_f
    cdef i64* pow3
    cdef unsigned char* states
    cdef int* dist
    cdef int* labels
    cdef int* cmap
    cdef i64* cmap_stamp
    cdef int* rc0
    cdef int* rc
    cdef int* tly
    cdef i64* tly_stamp
    cdef int* refs
    cdef i64* refs_stamp
    cdef int* refnnz
    cdef int* refkeys
    cdef int* refkeyn
    cdef unsigned char* refset
    cdef i64 stamp_pair
    cdef i64 stamp_leaf
    cdef i64 examined, skipped_degree, skipped_reversal
    cdef i64 symmetric, not_sc, axiom, noncomm
    cdef list survivors
    cdef list survivors_nc

    def __cinit__(self, int n, int ne):
        cdef int nn = n * n
        self.eu = <int*> malloc(ne * sizeof(int)) if ne else <int*> malloc(sizeof(int))
        self.ev = <int*> malloc(ne * sizeof(int)) if ne else <int*> malloc(sizeof(int))
        self.out_m = <u64*> malloc(n * sizeof(u64))
        self.in_m = <u64*> malloc(n * sizeof(u64))
        self.dd = <int*> malloc(n * sizeof(int))
        self.oo = <int*> malloc(n * sizeof(int))
        self.ii = <int*> malloc(n * sizeof(int))
        self.pair_d = <int*> malloc((n + 2) * sizeof(int))
        self.pair_f = <int*> malloc((n + 2) * sizeof(int))
        self.pow3 = <i64*> malloc((ne + 1) * sizeof(i64))
        self.states = <unsigned char*> malloc(ne + 1)
        self.dist = <int*> malloc(nn * sizeof(int))
        self.labels = <int*> malloc(nn * sizeof(int))
        self.cmap = <int*> malloc(4096 * sizeof(int))
        self.cmap_stamp = <i64*> malloc(4096 * sizeof(i64))
        self.rc0 = <int*> malloc((2 * n + 2) * sizeof(int))
        self.rc = <int*> malloc((2 * n + 2) * sizeof(int))
        self.tly = <int*> malloc(nn * sizeof(int))
        self.tly_stamp = <i64*> malloc(nn * sizeof(i64))
        self.refs = <int*> malloc(nn * n * sizeof(int))
        self.refs_stamp = <i64*> malloc(nn * n * sizeof(i64))
        self.refnnz = <int*> malloc(n * sizeof(int))
        self.refkeys = <int*> malloc(nn * sizeof(int))
        self.refkeyn = <int*> malloc(n * sizeof(int))
        self.refset = <unsigned char*> malloc(n)
        cdef int i
        for i in range(4096):
            self.cmap_stamp[i] = -1
        for i in range(nn):
            self.tly_stamp[i] = -1
        for i in range(nn * n):
            self.refs_stamp[i] = -1
        self.stamp_pair = 0
        self.stamp_leaf = 0
        self.survivors = []
        self.survivors_nc = []

    def __dealloc__(self):
        free(self.eu); free(self.ev); free(self.out_m); free(self.in_m)
        free(self.dd); free(self.oo); free(self.ii)
        free(self.pair_d); free(self.pair_f); free(self.pow3)
        free(self.states); free(self.dist); free(self.labels)
        free(self.cmap); free(self.cmap_stamp); free(self.rc0); free(self.rc)
        free(self.tly); free(self.tly_stamp)
        free(self.refs); free(self.refs_stamp)
        free(self.refnnz); free(self.refkeys); free(self.refkeyn)
        free(self.refset)

    cdef u64 _reach(self, u64* masks, int src) nogil:
        cdef u64 seen = (<u64> 1) << src
        cdef u64 frontier = seen
        cdef u64 nxt, m
        while frontier:
            nxt = 0
            m = frontier
            while m:
                nxt |= masks[__builtin_ctzll(m)]
                m &= m - 1
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    cdef void _all_pairs(self) nogil:
        cdef int n = self.n
        cdef int s, depth, v
        cdef u64 seen, frontier, nxt, m
        cdef int base
        for s in range(n * n):
            self.dist[s] = 63
        for s in range(n):
            base = s * n
            self.dist[base + s] = 0
            seen = (<u64> 1) << s
            frontier = seen
            depth = 0
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    nxt |= self.out_m[__builtin_ctzll(m)]
                    m &= m - 1
                frontier = nxt & ~seen
                seen |= frontier
                depth += 1
                m = frontier
                while m:
                    v = __builtin_ctzll(m)
                    self.dist[base + v] = depth
                    m &= m - 1

    cdef void _check_leaf(self, int nondigon):
        cdef int n = self.n
        cdef u64 full = ((<u64> 1) << n) - 1 if n < 64 else <u64> (-1)
        self.examined += 1
        if nondigon == 0:
            self.symmetric += 1
            return
        if self._reach(self.out_m, 0) != full or self._reach(self.in_m, 0) != full:
            self.not_sc += 1
            return
        self._all_pairs()

        # two-way distance classes + per-vertex valency constancy
        cdef int x, y, z, key, cid, c0, bx
        cdef int nclasses = 0
        cdef bint ok = 1
        self.stamp_leaf += 1
        c0 = 0
        for x in range(n):
            bx = x * n
            for y in range(2 * n + 2):
                self.rc[y] = 0
            for y in range(n):
                key = self.dist[bx + y] * 64 + self.dist[y * n + x]
                if self.cmap_stamp[key] == self.stamp_leaf:
                    cid = self.cmap[key]
                else:
                    cid = nclasses
                    nclasses += 1
                    self.cmap[key] = cid
                    self.cmap_stamp[key] = self.stamp_leaf
                    if x > 0:
                        ok = 0
                self.labels[bx + y] = cid
                if cid < 2 * n + 2:
                    self.rc[cid] += 1
            if x == 0:
                c0 = nclasses
                for y in range(c0):
                    self.rc0[y] = self.rc[y]
            elif ok:
                for y in range(c0):
                    if self.rc[y] != self.rc0[y]:
                        ok = 0
                        break
            if not ok:
                self.axiom += 1
                return
        cdef int c = nclasses  # c <= n here: rows hold n entries each

        # full intersection-number constancy via per-pair tallies
        cdef int lab, tkn, t, kk, cc = c * c
        cdef int refbase
        cdef bint match
        for x in range(c):
            self.refset[x] = 0
        for x in range(n):
            bx = x * n
            for y in range(n):
                lab = self.labels[bx + y]
                self.stamp_pair += 1
                tkn = 0
                for z in range(n):
                    key = self.labels[bx + z] * c + self.labels[z * n + y]
                    if self.tly_stamp[key] == self.stamp_pair:
                        self.tly[key] += 1
                    else:
                        self.tly_stamp[key] = self.stamp_pair
                        self.tly[key] = 1
                        self.rc[tkn] = key  # reuse rc as touched-key scratch
                        tkn += 1
                refbase = lab * cc
                if not self.refset[lab]:
                    self.refset[lab] = 1
                    self.refnnz[lab] = tkn
                    self.refkeyn[lab] = tkn
                    for t in range(tkn):
                        kk = self.rc[t]
                        self.refkeys[lab * n + t] = kk
                        self.refs[refbase + kk] = self.tly[kk]
                        self.refs_stamp[refbase + kk] = self.stamp_leaf
                else:
                    match = tkn == self.refnnz[lab]
                    if match:
                        for t in range(tkn):
                            kk = self.rc[t]
                            if (self.refs_stamp[refbase + kk] != self.stamp_leaf
                                    or self.refs[refbase + kk] != self.tly[kk]):
                                match = 0
                                break
                    if not match:
                        self.axiom += 1
                        return

        # commutativity of the tensor
        cdef bint commutative = 1
        cdef int i, j, sym
        for lab in range(c):
            refbase = lab * cc
            for t in range(self.refkeyn[lab]):
                kk = self.refkeys[lab * n + t]
                i = kk // c
                j = kk - i * c
                sym = j * c + i
                if (self.refs_stamp[refbase + sym] != self.stamp_leaf
                        or self.refs[refbase + sym] != self.refs[refbase + kk]):
                    commutative = 0
                    break
            if not commutative:
                break
        word = PyBytes_FromStringAndSize(<char*> self.states, self.ne)
        if commutative:
            self.survivors.append(word)
        else:
            self.noncomm += 1
            self.survivors_nc.append(word)

    cdef inline int _feasible(self, int vtx, int fmask) nogil:
        cdef int idx, bit
        for idx in range(self.npairs):
            bit = 1 << idx
            if fmask & bit and (self.dd[vtx] > self.pair_d[idx]
                                or self.oo[vtx] > self.pair_f[idx]
                                or self.ii[vtx] > self.pair_f[idx]):
                fmask ^= bit
        return fmask

    cdef inline void _apply(self, int depth, int s) nogil:
        cdef int u = self.eu[depth]
        cdef int v = self.ev[depth]
        if s == FWD:
            self.out_m[u] |= (<u64> 1) << v
            self.in_m[v] |= (<u64> 1) << u
            self.oo[u] += 1
            self.ii[v] += 1
        elif s == BWD:
            self.out_m[v] |= (<u64> 1) << u
            self.in_m[u] |= (<u64> 1) << v
            self.oo[v] += 1
            self.ii[u] += 1
        else:
            self.out_m[u] |= (<u64> 1) << v
            self.out_m[v] |= (<u64> 1) << u
            self.in_m[u] |= (<u64> 1) << v
            self.in_m[v] |= (<u64> 1) << u
            self.dd[u] += 1
            self.dd[v] += 1

    cdef inline void _undo(self, int depth, int s) nogil:
        cdef int u = self.eu[depth]
        cdef int v = self.ev[depth]
        if s == FWD:
            self.out_m[u] &= ~((<u64> 1) << v)
            self.in_m[v] &= ~((<u64> 1) << u)
            self.oo[u] -= 1
            self.ii[v] -= 1
        elif s == BWD:
            self.out_m[v] &= ~((<u64> 1) << u)
            self.in_m[u] &= ~((<u64> 1) << v)
            self.oo[v] -= 1
            self.ii[u] -= 1
        else:
            self.out_m[u] &= ~((<u64> 1) << v)
            self.out_m[v] &= ~((<u64> 1) << u)
            self.in_m[u] &= ~((<u64> 1) << v)
            self.in_m[v] &= ~((<u64> 1) << u)
            self.dd[u] -= 1
            self.dd[v] -= 1

    cdef void _dfs(self, int depth, int nondigon, int fmask, bint all_digons):
        if depth == self.ne:
            self._check_leaf(nondigon)
            return
        cdef i64 rem = self.pow3[self.ne - depth - 1]
        cdef int s, nm
        for s in range(3):
            if self.use_reversal and all_digons and s == BWD:
                self.skipped_reversal += rem
                continue
            self._apply(depth, s)
            self.states[depth] = s
            if self.prune:
                nm = self._feasible(self.eu[depth], fmask)
                if nm:
                    nm = self._feasible(self.ev[depth], nm)
                if not nm:
                    self.skipped_degree += rem
                    self._undo(depth, s)
                    continue
            else:
                nm = 0
            self._dfs(depth + 1, nondigon + (1 if s != DIG else 0), nm,
                      all_digons and s == DIG)
            self._undo(depth, s)


def search_run(n, edges, prefix=(), prune_degree=False, use_reversal=False):
    """Compiled twin of `_kernel_py.search_run`."""
    edges = list(edges)
    cdef int ne = len(edges)
    cdef int nn = <int> n
    if nn < 1 or nn > 64:
        raise ValueError("kernel supports 1..64 vertices")
    if ne > 39:
        raise ValueError("kernel supports at most 39 edges")
    cdef _Ctx ctx = _Ctx(nn, ne)
    ctx.n = nn
    ctx.ne = ne
    ctx.prune = bool(prune_degree)
    ctx.use_reversal = bool(use_reversal)

    cdef int i, u, v
    deg = [0] * nn
    for i, (u, v) in enumerate(edges):
        ctx.eu[i] = u
        ctx.ev[i] = v
        deg[u] += 1
        deg[v] += 1
    for i in range(nn):
        ctx.out_m[i] = 0
        ctx.in_m[i] = 0
        ctx.dd[i] = 0
        ctx.oo[i] = 0
        ctx.ii[i] = 0
    ctx.pow3[0] = 1
    for i in range(1, ne + 1):
        ctx.pow3[i] = ctx.pow3[i - 1] * 3

    pairs = []
    if ctx.prune:
        if ne and all(x == deg[0] for x in deg):
            k = deg[0]
            pairs = [(dl, (k - dl) // 2) for dl in range(k + 1)
                     if (k - dl) % 2 == 0]
        elif ne == 0:
            pairs = [(0, 0)]
    ctx.npairs = len(pairs)
    for i, (dl, f) in enumerate(pairs):
        ctx.pair_d[i] = dl
        ctx.pair_f[i] = f

    np_ = len(prefix)
    branch_leaves = ctx.pow3[ne - np_]
    cdef int fmask = (1 << ctx.npairs) - 1
    cdef bint all_digons = 1
    cdef int nondigon = 0
    cdef int s
    done = False
    if ctx.prune and not pairs:
        ctx.skipped_degree += branch_leaves
        done = True
    if not done:
        for t in range(np_):
            s = prefix[t]
            if use_reversal and all_digons and s == BWD:
                ctx.skipped_reversal += branch_leaves
                done = True
                break
            ctx._apply(t, s)
            ctx.states[t] = s
            nondigon += 1 if s != DIG else 0
            all_digons = all_digons and s == DIG
            if ctx.prune:
                fmask = ctx._feasible(ctx.eu[t], fmask)
                if fmask:
                    fmask = ctx._feasible(ctx.ev[t], fmask)
                if not fmask:
                    ctx.skipped_degree += branch_leaves
                    done = True
                    break
    if not done:
        ctx._dfs(np_, nondigon, fmask, all_digons)

    return {
        "examined": ctx.examined,
        "skipped_degree": ctx.skipped_degree,
        "skipped_reversal": ctx.skipped_reversal,
        "symmetric": ctx.symmetric,
        "not_strongly_connected": ctx.not_sc,
        "axiom": ctx.axiom,
        "noncommutative": ctx.noncomm,
        "survivors": ctx.survivors,
        "survivors_noncomm": ctx.survivors_nc,
    }
