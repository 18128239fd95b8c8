# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled versions of the routines in ``_pykernel``; same signatures and results."""
import itertools

from libc.stdlib cimport free, malloc

from ._pykernel import LimitExceeded

IMPLEMENTATION = "cython"


cdef int _labels(int nd, int* nxt, int* prv, int* sign, int* lab) noexcept nogil:
    cdef int nflags = 2 * nd
    cdef int count = 0
    cdef int f0, f, d, g, dg
    for f0 in range(nflags):
        lab[f0] = -1
    for f0 in range(nflags):
        if lab[f0] >= 0 or nxt[f0 >> 1] < 0:
            continue
        f = f0
        while True:
            lab[f] = count
            d = f >> 1
            g = ((d ^ 1) << 1) | ((f & 1) ^ (1 if sign[d >> 1] > 0 else 0))
            lab[g] = count
            dg = g >> 1
            if g & 1:
                f = prv[dg] << 1
            else:
                f = (nxt[dg] << 1) | 1
            if f == f0:
                break
        count += 1
    return count


cdef int* _ints(object values, int size) except NULL:
    cdef int* arr = <int*> malloc(max(size, 1) * sizeof(int))
    if arr == NULL:
        raise MemoryError()
    cdef int i
    for i in range(size):
        arr[i] = values[i]
    return arr


def face_labels(nxt, prv, sign):
    cdef int nd = len(nxt)
    cdef int* cn = _ints(nxt, nd)
    cdef int* cp = _ints(prv, nd)
    cdef int* cs = _ints(sign, len(sign))
    cdef int* lab = <int*> malloc(max(2 * nd, 1) * sizeof(int))
    cdef int count
    try:
        count = _labels(nd, cn, cp, cs, lab)
        return [lab[i] for i in range(2 * nd)], count
    finally:
        free(cn)
        free(cp)
        free(cs)
        free(lab)


cdef class _Search:
    cdef int n, m, nd, nflags, nextra, base_edges, max_genus, split_depth, worker, workers
    cdef long long limit
    cdef int* nxt
    cdef int* prv
    cdef int* sign
    cdef int* eu
    cdef int* ev
    cdef int* extra
    cdef int* anchor
    cdef int* labs
    cdef int* corners
    cdef long long branch_counter
    cdef long long current_branch
    cdef set keep
    cdef list results

    def __cinit__(self, int n, edges, extra, int max_genus, keep, long long limit,
                  int worker, int workers, int split_depth, int base_edges):
        cdef int i
        self.n = n
        self.m = len(edges)
        self.nd = 2 * self.m
        self.nflags = 2 * self.nd
        self.nextra = len(extra)
        self.base_edges = base_edges
        self.max_genus = max_genus
        self.keep = set(keep)
        self.limit = limit
        self.worker = worker
        self.workers = workers
        self.split_depth = min(split_depth, self.nextra)
        self.results = []
        self.nxt = _ints([-1] * self.nd, self.nd)
        self.prv = _ints([-1] * self.nd, self.nd)
        self.sign = _ints([1] * self.m, self.m)
        self.eu = _ints([e[0] for e in edges], self.m)
        self.ev = _ints([e[1] for e in edges], self.m)
        self.extra = _ints(extra, self.nextra)
        self.anchor = _ints([-1] * n, n)
        self.labs = <int*> malloc(max((self.nextra + 1) * self.nflags, 1) * sizeof(int))
        self.corners = <int*> malloc(max(2 * (self.nextra + 1) * self.nd, 1) * sizeof(int))
        if self.labs == NULL or self.corners == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self.nxt)
        free(self.prv)
        free(self.sign)
        free(self.eu)
        free(self.ev)
        free(self.extra)
        free(self.anchor)
        free(self.labs)
        free(self.corners)

    cdef int rec(self, int depth) except -1:
        cdef int* lab = self.labs + depth * self.nflags
        cdef int nfaces = _labels(self.nd, self.nxt, self.prv, self.sign, lab)
        cdef int genus = 2 - self.n + self.base_edges + depth - nfaces
        cdef long long b
        cdef int e, u, v, a, bb, x, y, xn, yn, fx, i, j, nu, nv, s
        cdef int* cu
        cdef int* cv
        if genus > self.max_genus:
            return 0
        if depth == self.split_depth:
            b = self.branch_counter
            self.branch_counter += 1
            if b % self.workers != self.worker:
                return 0
            self.current_branch = b
        if depth == self.nextra:
            if genus in self.keep:
                self.results.append((
                    self.current_branch,
                    tuple([self.nxt[i] for i in range(self.nd)]),
                    tuple([self.sign[i] for i in range(self.m)]),
                    genus,
                ))
                if len(self.results) > self.limit:
                    raise LimitExceeded()
            return 0
        e = self.extra[depth]
        u = self.eu[e]
        v = self.ev[e]
        a = 2 * e
        bb = 2 * e + 1
        cu = self.corners + 2 * depth * self.nd
        cv = cu + self.nd
        nu = 0
        x = self.anchor[u]
        while True:
            cu[nu] = x
            nu += 1
            x = self.nxt[x]
            if x == self.anchor[u]:
                break
        nv = 0
        y = self.anchor[v]
        while True:
            cv[nv] = y
            nv += 1
            y = self.nxt[y]
            if y == self.anchor[v]:
                break
        for i in range(nu):
            x = cu[i]
            fx = lab[2 * x]
            for j in range(nv):
                y = cv[j]
                if lab[2 * y] != fx:
                    continue
                xn = self.nxt[x]
                self.nxt[x] = a
                self.prv[a] = x
                self.nxt[a] = xn
                self.prv[xn] = a
                yn = self.nxt[y]
                self.nxt[y] = bb
                self.prv[bb] = y
                self.nxt[bb] = yn
                self.prv[yn] = bb
                for s in (1, -1):
                    self.sign[e] = s
                    self.rec(depth + 1)
                self.sign[e] = 1
                self.nxt[y] = yn
                self.prv[yn] = y
                self.nxt[x] = xn
                self.prv[xn] = x
                self.nxt[a] = -1
                self.prv[a] = -1
                self.nxt[bb] = -1
                self.prv[bb] = -1
        return 0

    def run(self, tree):
        cdef int v, i, k, d
        tree_darts = [[] for _ in range(self.n)]
        for e in tree:
            tree_darts[self.eu[e]].append(2 * e)
            tree_darts[self.ev[e]].append(2 * e + 1)
        if self.n > 1 and any(not ds for ds in tree_darts):
            raise ValueError("the tree must span a connected graph")
        per_vertex = []
        for v in range(self.n):
            ds = tree_darts[v]
            self.anchor[v] = ds[0] if ds else -1
            if len(ds) <= 2:
                per_vertex.append([tuple(ds)])
            else:
                per_vertex.append([(ds[0],) + p for p in itertools.permutations(ds[1:])])
        for combo in itertools.product(*per_vertex):
            for ds in combo:
                k = len(ds)
                for i in range(k):
                    d = ds[i]
                    self.nxt[d] = ds[(i + 1) % k]
                    self.prv[ds[(i + 1) % k]] = d
            self.rec(0)
        return self.results


def enumerate_embeddings(vertex_count, edges, tree, extra, max_genus, keep, limit,
                         worker=0, workers=1, split_depth=1):
    search = _Search(vertex_count, list(edges), list(extra), max_genus, keep, min(limit, 1 << 62),
                     worker, workers, split_depth, len(tree))
    return search.run(list(tree))


def canonical_code(nxt, sign, roots):
    cdef int nd = len(nxt)
    cdef int nflags = 2 * nd
    cdef int ncode = 3 * nflags
    cdef int* cross = <int*> malloc(max(nflags, 1) * sizeof(int))
    cdef int* turn = <int*> malloc(max(nflags, 1) * sizeof(int))
    cdef int* prv = <int*> malloc(max(nd, 1) * sizeof(int))
    cdef int* num = <int*> malloc(max(nflags, 1) * sizeof(int))
    cdef int* order = <int*> malloc(max(nflags, 1) * sizeof(int))
    cdef int* best = <int*> malloc(max(ncode, 1) * sizeof(int))
    cdef int* code = <int*> malloc(max(ncode, 1) * sizeof(int))
    cdef int* cn = _ints(nxt, nd)
    cdef int* cs = _ints(sign, len(sign))
    cdef int f, d, r, i, k, head, tail, c, g, pos
    cdef bint have_best = False
    cdef bint tied, worse
    cdef int imgs[3]
    try:
        for d in range(nd):
            prv[cn[d]] = d
        for f in range(nflags):
            d = f >> 1
            cross[f] = ((d ^ 1) << 1) | ((f & 1) ^ (1 if cs[d >> 1] > 0 else 0))
            turn[f] = (prv[d] << 1) if (f & 1) else ((cn[d] << 1) | 1)
        for r in roots:
            for i in range(nflags):
                num[i] = -1
            num[r] = 0
            order[0] = r
            tail = 1
            head = 0
            pos = 0
            tied = have_best
            worse = False
            while head < tail:
                f = order[head]
                head += 1
                imgs[0] = cross[f]
                imgs[1] = turn[f]
                imgs[2] = f ^ 1
                for k in range(3):
                    g = imgs[k]
                    c = num[g]
                    if c < 0:
                        c = tail
                        num[g] = tail
                        order[tail] = g
                        tail += 1
                    if tied:
                        if c > best[pos]:
                            worse = True
                            break
                        if c < best[pos]:
                            tied = False
                    code[pos] = c
                    pos += 1
                if worse:
                    break
            if not worse and (not have_best or not tied):
                for i in range(pos):
                    best[i] = code[i]
                have_best = True
        if not have_best:
            return ()
        return tuple([best[i] for i in range(ncode)])
    finally:
        free(cross)
        free(turn)
        free(prv)
        free(num)
        free(order)
        free(best)
        free(code)
        free(cn)
        free(cs)
