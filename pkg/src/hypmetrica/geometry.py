"""Planar domains: primitives, exact boundary distance, boundary sampling,
inversion, smallest enclosing disk and directional tangent-ball radii.

A domain is a base primitive (disk, half-plane, strip, polygon or the whole
plane) minus a list of holes (disks, polygons, punctures, segment slits).
Boundary distance and tangent-ball radii are evaluated from closed forms per
primitive; boundary *sampling* is the discrete companion used by the
sup/inf-type metrics.

All operations here are pure and deterministic: there is no RNG anywhere in
this module except a fixed-seed shuffle inside the smallest-enclosing-disk
solver (which does not change its output, only its expected running time).
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegenerateBoundary,
    EmptyInput,
    InversionAtCenter,
    PointOutsideDomain,
    UnsupportedInfinityInDomain,
    ValidationError,
)

_EPS = 1e-12


def _xy(p) -> np.ndarray:
    """Coerce a Point / pair / array to a float ndarray of shape (2,)."""
    if isinstance(p, Point):
        return np.array((p.x, p.y), dtype=float)
    a = np.asarray(p, dtype=float)
    if a.shape != (2,):
        raise ValidationError(f"expected a planar point, got shape {a.shape}")
    return a


def _pts(ps) -> np.ndarray:
    """Coerce an iterable of points to an (n, 2) float array."""
    if isinstance(ps, np.ndarray) and ps.ndim == 2 and ps.shape[1] == 2:
        return ps.astype(float, copy=False)
    return np.array([_xy(p) for p in ps], dtype=float).reshape(-1, 2)


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValidationError("point coordinates must be finite")

    def as_array(self) -> np.ndarray:
        return np.array((self.x, self.y), dtype=float)

    @staticmethod
    def of(p) -> "Point":
        if isinstance(p, Point):
            return p
        a = _xy(p)
        return Point(float(a[0]), float(a[1]))


@dataclass(frozen=True)
class Disk:
    center: Point
    radius: float

    def __post_init__(self):
        if not (self.radius > 0):
            raise ValidationError("disk radius must be positive")


@dataclass(frozen=True)
class HalfPlane:
    """Open half-plane {z : normal . z < offset}; normal is the outward unit
    normal of the boundary line."""

    normal: tuple
    offset: float

    def __post_init__(self):
        n = _xy(self.normal)
        if abs(float(np.hypot(*n)) - 1.0) > 1e-12:
            raise ValidationError("half-plane normal must be a unit vector")
        object.__setattr__(self, "normal", (float(n[0]), float(n[1])))

    def n(self) -> np.ndarray:
        return np.asarray(self.normal, dtype=float)


# ---------------------------------------------------------------------------
# boundary pieces (internal)
#
# Every piece knows, in vectorized form over arrays of points P (k,2) and
# unit directions T (k,2):
#   dist(P)        distance from P to the piece's boundary set
#   inside(P)      for base pieces: P strictly inside; for holes: P strictly
#                  outside the (closed) removed set
#   ball_limit(P, T)  largest r with B(P + r T, r) avoiding the piece
#   crossings(A, B)   whether open segments A[i]B[i] cross the piece
#   components()   boundary components for sampling
# ---------------------------------------------------------------------------


def _seg_point_dist(P, a, b):
    """Distance from points P (k,2) to segment [a,b]."""
    a = np.asarray(a, float)
    d = np.asarray(b, float) - a
    L2 = float(d @ d)
    if L2 <= _EPS**2:
        return np.hypot(*(P - a).T)
    t = np.clip(((P - a) @ d) / L2, 0.0, 1.0)
    proj = a + t[:, None] * d
    return np.hypot(*(P - proj).T)


def _seg_seg_cross(A, B, c, d, include_endpoints=False):
    """Vectorized proper-intersection test of segments A[i]B[i] vs [c,d]."""
    c = np.asarray(c, float)
    d = np.asarray(d, float)

    def orient(p, q, R):
        return (q[0] - p[0]) * (R[:, 1] - p[1]) - (q[1] - p[1]) * (R[:, 0] - p[0])

    o1 = orient(c, d, A)
    o2 = orient(c, d, B)
    # orientation of c and d relative to each segment A[i]B[i]
    e = B - A
    o3 = e[:, 0] * (c[1] - A[:, 1]) - e[:, 1] * (c[0] - A[:, 0])
    o4 = e[:, 0] * (d[1] - A[:, 1]) - e[:, 1] * (d[0] - A[:, 0])
    if include_endpoints:
        proper = (o1 * o2 <= 0) & (o3 * o4 <= 0) & ((o1 != 0) | (o2 != 0))
    else:
        proper = (o1 * o2 < 0) & (o3 * o4 < 0)
    # collinear overlap is treated as a crossing (conservative)
    degenerate = (o1 == 0) & (o2 == 0)
    if np.any(degenerate):
        lo = np.minimum(A, B)
        hi = np.maximum(A, B)
        box = (np.minimum(c, d) <= hi).all(axis=1) & (np.maximum(c, d) >= lo).all(axis=1)
        proper = proper | (degenerate & box)
    return proper


def _ball_limit_point(P, T, q):
    """Largest r with B(P + rT, r) not containing the point q."""
    u = np.asarray(q, float) - P
    dot = np.einsum("ij,ij->i", u, T)
    n2 = np.einsum("ij,ij->i", u, u)
    out = np.full(len(P), np.inf)
    pos = dot > _EPS
    out[pos] = n2[pos] / (2.0 * dot[pos])
    return out


def _ball_limit_segment(P, T, a, b):
    """Largest r with B(P + rT, r) disjoint from segment [a,b].

    Minimizes |u0 + t d|^2 / (2 <u0 + t d, T>) over t in [0,1] where the
    denominator is positive; the critical points solve a quadratic.
    """
    a = np.asarray(a, float)
    d = np.asarray(b, float) - a
    u0 = a - P
    a1 = u0 @ d
    a2 = float(d @ d)
    b1 = np.einsum("ij,ij->i", u0, T)
    b2 = T @ d
    n0 = np.einsum("ij,ij->i", u0, u0)

    best = np.full(len(P), np.inf)

    def consider(t):
        u = u0 + t[:, None] * d
        den = 2.0 * (np.einsum("ij,ij->i", u, T))
        num = np.einsum("ij,ij->i", u, u)
        ok = den > _EPS
        val = np.where(ok, num / np.where(ok, den, 1.0), np.inf)
        np.minimum(best, val, out=best)

    consider(np.zeros(len(P)))
    consider(np.ones(len(P)))
    # quadratic a2*b2 t^2 + 2 a2 b1 t + (2 a1 b1 - n0 b2) = 0
    qa = a2 * b2
    qb = 2.0 * a2 * b1
    qc = 2.0 * a1 * b1 - n0 * b2
    disc = qb * qb - 4.0 * qa * qc
    ok = (np.abs(qa) > _EPS) & (disc >= 0)
    if np.any(ok):
        sq = np.sqrt(np.where(ok, disc, 0.0))
        for sgn in (-1.0, 1.0):
            t = np.where(ok, (-qb + sgn * sq) / np.where(ok, 2 * qa, 1.0), -1.0)
            t = np.clip(t, 0.0, 1.0)
            tq = np.where(ok, t, 0.0)
            u = u0 + tq[:, None] * d
            den = 2.0 * np.einsum("ij,ij->i", u, T)
            num = np.einsum("ij,ij->i", u, u)
            good = ok & (den > _EPS)
            val = np.where(good, num / np.where(good, den, 1.0), np.inf)
            np.minimum(best, val, out=best)
    # linear case qa ~ 0
    lin = (np.abs(qa) <= _EPS) & (np.abs(qb) > _EPS)
    if np.any(lin):
        t = np.clip(np.where(lin, -qc / np.where(lin, qb, 1.0), 0.0), 0.0, 1.0)
        u = u0 + t[:, None] * d
        den = 2.0 * np.einsum("ij,ij->i", u, T)
        num = np.einsum("ij,ij->i", u, u)
        good = lin & (den > _EPS)
        val = np.where(good, num / np.where(good, den, 1.0), np.inf)
        np.minimum(best, val, out=best)
    return best


def _tan_line_params(n: int) -> np.ndarray:
    """Nested line parameterization t_k = tan(pi (k/n - 1/2)), k = 1..n-1."""
    k = np.arange(1, n)
    return np.tan(np.pi * (k / n - 0.5))


class _Component:
    """One boundary component for sampling purposes."""

    def __init__(self, kind, length, sample, curvature, sides=False):
        self.kind = kind          # "circle" | "line" | "polyline" | "point" | "slit"
        self.length = length      # np.inf for lines
        self.sample = sample      # callable n -> (points, curvature_radii, sides)
        self.curvature = curvature
        self.sides = sides


class _Piece:
    is_base = False
    crossing_sensitive = False

    def dist(self, P):  # pragma: no cover - interface
        raise NotImplementedError

    def inside(self, P):
        raise NotImplementedError

    def ball_limit(self, P, T):
        raise NotImplementedError

    def crossings(self, A, B):
        return np.zeros(len(A), dtype=bool)

    def components(self):
        raise NotImplementedError


class _DiskBase(_Piece):
    is_base = True

    def __init__(self, center, radius):
        self.c = _xy(center)
        self.r = float(radius)
        if self.r <= 0:
            raise ValidationError("disk radius must be positive")

    def dist(self, P):
        return self.r - np.hypot(*(P - self.c).T)

    def inside(self, P):
        return np.hypot(*(P - self.c).T) < self.r

    def ball_limit(self, P, T):
        u = P - self.c
        n2 = np.einsum("ij,ij->i", u, u)
        dot = np.einsum("ij,ij->i", u, T)
        return (self.r**2 - n2) / (2.0 * (self.r + dot))

    def components(self):
        def sample(n):
            th = 2 * np.pi * np.arange(n) / n
            pts = self.c + self.r * np.stack([np.cos(th), np.sin(th)], axis=1)
            return pts, np.full(n, self.r), np.zeros(n, dtype=np.int8)

        return [_Component("circle", 2 * np.pi * self.r, sample, self.r)]


class _HalfPlaneBase(_Piece):
    is_base = True

    def __init__(self, normal, offset):
        n = _xy(normal)
        nn = float(np.hypot(*n))
        if abs(nn - 1.0) > 1e-12:
            raise ValidationError("half-plane normal must be a unit vector")
        self.n = n / nn
        self.off = float(offset)

    def dist(self, P):
        return self.off - P @ self.n

    def inside(self, P):
        return P @ self.n < self.off

    def ball_limit(self, P, T):
        d = self.off - P @ self.n
        den = 1.0 + T @ self.n
        out = np.full(len(P), np.inf)
        ok = den > _EPS
        out[ok] = d[ok] / den[ok]
        return out

    def components(self):
        p0 = self.off * self.n
        t = np.array([-self.n[1], self.n[0]])

        def sample(n):
            ts = _tan_line_params(n + 1)
            pts = p0 + ts[:, None] * t
            return pts, np.full(len(ts), np.inf), np.zeros(len(ts), dtype=np.int8)

        return [_Component("line", np.inf, sample, np.inf)]


class _StripBase(_Piece):
    is_base = True

    def __init__(self, axis, halfwidth):
        if axis not in ("x", "y"):
            raise ValidationError("strip axis must be 'x' or 'y'")
        self.axis = axis
        self.h = float(halfwidth)
        if self.h <= 0:
            raise ValidationError("strip halfwidth must be positive")
        self.coord = 1 if axis == "x" else 0  # bounded coordinate

    def dist(self, P):
        return self.h - np.abs(P[:, self.coord])

    def inside(self, P):
        return np.abs(P[:, self.coord]) < self.h

    def ball_limit(self, P, T):
        # two wall half-planes
        out = np.full(len(P), np.inf)
        for s in (+1.0, -1.0):
            d = self.h - s * P[:, self.coord]
            den = 1.0 + s * T[:, self.coord]
            ok = den > _EPS
            val = np.where(ok, d / np.where(ok, den, 1.0), np.inf)
            np.minimum(out, val, out=out)
        return out

    def components(self):
        comps = []
        for s in (+1.0, -1.0):
            def sample(n, s=s):
                ts = _tan_line_params(n + 1)
                pts = np.zeros((len(ts), 2))
                pts[:, 1 - self.coord] = ts
                pts[:, self.coord] = s * self.h
                return pts, np.full(len(ts), np.inf), np.zeros(len(ts), dtype=np.int8)

            comps.append(_Component("line", np.inf, sample, np.inf))
        return comps


class _PolyBoundary:
    """Shared edge machinery for polygon bases and polygon holes."""

    def __init__(self, vertices):
        V = _pts(vertices)
        if len(V) < 3:
            raise ValidationError("polygon needs at least 3 vertices")
        area2 = float(np.sum(V[:, 0] * np.roll(V[:, 1], -1) - np.roll(V[:, 0], -1) * V[:, 1]))
        if abs(area2) <= _EPS:
            raise ValidationError("polygon is degenerate")
        if area2 < 0:
            V = V[::-1].copy()
        self.V = V
        self.E = list(zip(V, np.roll(V, -1, axis=0)))
        self.perimeter = float(sum(np.hypot(*(b - a)) for a, b in self.E))

    def dist(self, P):
        out = np.full(len(P), np.inf)
        for a, b in self.E:
            np.minimum(out, _seg_point_dist(P, a, b), out=out)
        return out

    def winding_inside(self, P):
        # even-odd ray crossing, robust enough for simple polygons
        x, y = P[:, 0], P[:, 1]
        inside = np.zeros(len(P), dtype=bool)
        for a, b in self.E:
            cond = (a[1] > y) != (b[1] > y)
            with np.errstate(divide="ignore", invalid="ignore"):
                xin = (b[0] - a[0]) * (y - a[1]) / (b[1] - a[1]) + a[0]
            flip = cond & (x < xin)
            inside ^= flip
        return inside

    def ball_limit(self, P, T):
        out = np.full(len(P), np.inf)
        for a, b in self.E:
            np.minimum(out, _ball_limit_segment(P, T, a, b), out=out)
        return out

    def crossings(self, A, B):
        out = np.zeros(len(A), dtype=bool)
        for a, b in self.E:
            out |= _seg_seg_cross(A, B, a, b)
        return out

    def sample_positions(self, n):
        L = self.perimeter
        s = np.arange(n) * (L / n)
        pts = np.empty((n, 2))
        acc = 0.0
        idx = 0
        for a, b in self.E:
            seg = float(np.hypot(*(b - a)))
            while idx < n and s[idx] < acc + seg - 1e-15:
                t = (s[idx] - acc) / seg
                pts[idx] = a + t * (b - a)
                idx += 1
            acc += seg
        while idx < n:  # numerical leftovers land on the final vertex
            pts[idx] = self.E[-1][1]
            idx += 1
        return pts


class _PolygonBase(_Piece):
    is_base = True
    crossing_sensitive = True

    def __init__(self, vertices):
        self.poly = _PolyBoundary(vertices)

    def dist(self, P):
        return self.poly.dist(P)

    def inside(self, P):
        return self.poly.winding_inside(P)

    def ball_limit(self, P, T):
        return self.poly.ball_limit(P, T)

    def crossings(self, A, B):
        return self.poly.crossings(A, B)

    def components(self):
        def sample(n):
            pts = self.poly.sample_positions(n)
            return pts, np.full(n, np.inf), np.zeros(n, dtype=np.int8)

        return [_Component("polyline", self.poly.perimeter, sample, np.inf)]


class _PlaneBase(_Piece):
    is_base = True

    def dist(self, P):
        return np.full(len(P), np.inf)

    def inside(self, P):
        return np.ones(len(P), dtype=bool)

    def ball_limit(self, P, T):
        return np.full(len(P), np.inf)

    def components(self):
        return []


class _DiskHole(_Piece):
    crossing_sensitive = True

    def __init__(self, center, radius):
        self.c = _xy(center)
        self.r = float(radius)
        if self.r <= 0:
            raise ValidationError("hole radius must be positive")

    def dist(self, P):
        return np.hypot(*(P - self.c).T) - self.r

    def inside(self, P):  # i.e. outside the closed hole
        return np.hypot(*(P - self.c).T) > self.r

    def ball_limit(self, P, T):
        u = P - self.c
        n2 = np.einsum("ij,ij->i", u, u)
        dot = np.einsum("ij,ij->i", u, T)
        den = self.r - dot
        out = np.full(len(P), np.inf)
        ok = den > _EPS
        out[ok] = (n2[ok] - self.r**2) / (2.0 * den[ok])
        return out

    def crossings(self, A, B):
        # endpoints are outside the hole, so crossing <=> segment dips inside
        d = B - A
        L2 = np.einsum("ij,ij->i", d, d)
        t = np.clip(np.einsum("ij,ij->i", self.c - A, d) / np.maximum(L2, _EPS), 0, 1)
        proj = A + t[:, None] * d
        return np.hypot(*(proj - self.c).T) < self.r - _EPS

    def components(self):
        def sample(n):
            th = 2 * np.pi * np.arange(n) / n
            pts = self.c + self.r * np.stack([np.cos(th), np.sin(th)], axis=1)
            return pts, np.full(n, self.r), np.zeros(n, dtype=np.int8)

        return [_Component("circle", 2 * np.pi * self.r, sample, self.r)]


class _PolygonHole(_Piece):
    crossing_sensitive = True

    def __init__(self, vertices):
        self.poly = _PolyBoundary(vertices)

    def dist(self, P):
        return self.poly.dist(P)

    def inside(self, P):
        return ~(self.poly.winding_inside(P) | (self.poly.dist(P) <= _EPS))

    def ball_limit(self, P, T):
        return self.poly.ball_limit(P, T)

    def crossings(self, A, B):
        return self.poly.crossings(A, B)

    def components(self):
        def sample(n):
            pts = self.poly.sample_positions(n)
            return pts, np.full(n, np.inf), np.zeros(n, dtype=np.int8)

        return [_Component("polyline", self.poly.perimeter, sample, np.inf)]


class _Puncture(_Piece):
    crossing_sensitive = True

    def __init__(self, point):
        self.p = _xy(point)

    def dist(self, P):
        return np.hypot(*(P - self.p).T)

    def inside(self, P):
        return np.hypot(*(P - self.p).T) > 0.0

    def ball_limit(self, P, T):
        return _ball_limit_point(P, T, self.p)

    def crossings(self, A, B):
        scale = np.maximum(np.hypot(*(B - A).T), 1.0)
        d = B - A
        L2 = np.einsum("ij,ij->i", d, d)
        t = np.clip(np.einsum("ij,ij->i", self.p - A, d) / np.maximum(L2, _EPS), 0, 1)
        proj = A + t[:, None] * d
        return np.hypot(*(proj - self.p).T) < 1e-12 * scale

    def components(self):
        def sample(n):
            return (self.p[None, :].copy(), np.array([np.nan]),
                    np.zeros(1, dtype=np.int8))

        return [_Component("point", 0.0, sample, np.nan)]


class _Slit(_Piece):
    crossing_sensitive = True

    def __init__(self, a, b):
        self.a = _xy(a)
        self.b = _xy(b)
        self.L = float(np.hypot(*(self.b - self.a)))
        if self.L <= _EPS:
            raise ValidationError("slit endpoints coincide")

    def dist(self, P):
        return _seg_point_dist(P, self.a, self.b)

    def inside(self, P):
        return _seg_point_dist(P, self.a, self.b) > 0.0

    def ball_limit(self, P, T):
        return _ball_limit_segment(P, T, self.a, self.b)

    def crossings(self, A, B):
        return _seg_seg_cross(A, B, self.a, self.b)

    def components(self):
        # interior points are emitted once per side (identical coordinates,
        # side = +-1); endpoints once with side 0
        def sample(n):
            n_int = max(1, (max(n, 4) - 2) // 2)
            t = (np.arange(n_int) + 0.5) / n_int
            inner = self.a + t[:, None] * (self.b - self.a)
            pts = np.vstack([self.a, self.b, inner, inner])
            sides = np.concatenate([
                np.zeros(2, dtype=np.int8),
                np.ones(n_int, dtype=np.int8),
                -np.ones(n_int, dtype=np.int8),
            ])
            curv = np.full(len(pts), np.inf)
            return pts, curv, sides

        return [_Component("slit", 2 * self.L, sample, np.inf, sides=True)]


# ---------------------------------------------------------------------------
# DomainSpec
# ---------------------------------------------------------------------------

_BASE_BUILDERS = {
    "disk": lambda d: _DiskBase(d["center"], d["radius"]),
    "halfplane": lambda d: _HalfPlaneBase(d["normal"], d["offset"]),
    "strip": lambda d: _StripBase(d["axis"], d["halfwidth"]),
    "polygon": lambda d: _PolygonBase(d["vertices"]),
    "plane": lambda d: _PlaneBase(),
}

_HOLE_BUILDERS = {
    "disk": lambda d: _DiskHole(d["center"], d["radius"]),
    "polygon": lambda d: _PolygonHole(d["vertices"]),
    "puncture": lambda d: _Puncture(d["point"]),
    "segment": lambda d: _Slit(d["a"], d["b"]),
}


@dataclass(frozen=True)
class DomainSpec:
    """Constructive planar domain: base primitive minus holes.

    ``base`` and each hole are plain dicts matching the JSON schema, e.g.
    ``{"type": "disk", "center": [0, 0], "radius": 1.0}``.  ``unbounded``
    records whether the domain is unbounded (infinity is then treated as a
    virtual boundary point by the Moebius-invariant metrics).
    """

    base: dict
    holes: tuple = ()
    unbounded: bool = None  # derived from base when omitted
    infinity_interior: bool = False

    def __post_init__(self):
        if self.base.get("type") not in _BASE_BUILDERS:
            raise ValidationError(f"unknown base type {self.base.get('type')!r}")
        object.__setattr__(self, "holes", tuple(dict(h) for h in self.holes))
        derived = self.base["type"] not in ("disk", "polygon")
        if self.unbounded is None:
            object.__setattr__(self, "unbounded", derived)
        elif bool(self.unbounded) != derived:
            raise ValidationError(
                f"unbounded={self.unbounded} inconsistent with base {self.base['type']!r}")
        for h in self.holes:
            if h.get("type") not in _HOLE_BUILDERS:
                raise ValidationError(f"unknown hole type {h.get('type')!r}")
        # boundary must hold at least two points (infinity counts when unbounded)
        n_boundary = len(self._pieces) - 1 + (1 if self.unbounded else 0)
        if self.base["type"] != "plane":
            n_boundary += 1
        if self.base["type"] == "plane" and n_boundary < 2:
            raise DegenerateBoundary("domain boundary has fewer than 2 points")
        self._validate_holes()

    @cached_property
    def _pieces(self) -> list:
        pieces = [_BASE_BUILDERS[self.base["type"]](self.base)]
        pieces += [_HOLE_BUILDERS[h["type"]](h) for h in self.holes]
        return pieces

    @cached_property
    def _crossing_pieces(self) -> list:
        return [p for p in self._pieces if p.crossing_sensitive]

    def _validate_holes(self):
        base = self._pieces[0]
        for h, piece in zip(self.holes, self._pieces[1:]):
            if h["type"] == "puncture":
                probe = _pts([h["point"]])
            elif h["type"] == "segment":
                probe = _pts([h["a"], h["b"],
                              0.5 * (_xy(h["a"]) + _xy(h["b"]))])
            elif h["type"] == "disk":
                probe = _pts([h["center"]])
            else:
                probe = _pts(h["vertices"])
            if h["type"] in ("puncture", "segment"):
                if not bool(np.all(base.inside(probe))):
                    raise ValidationError(f"{h['type']} hole must lie in the open base")
            else:
                if not bool(np.all(base.dist(probe) >= -1e-9)):
                    raise ValidationError(f"{h['type']} hole must lie in the base closure")

    # -- convenience constructors -------------------------------------------

    @staticmethod
    def disk(center=(0.0, 0.0), radius=1.0, holes=()):
        return DomainSpec({"type": "disk", "center": list(map(float, _xy(center))),
                           "radius": float(radius)}, tuple(holes))

    @staticmethod
    def halfplane(normal=(0.0, -1.0), offset=0.0, holes=()):
        n = _xy(normal)
        return DomainSpec({"type": "halfplane", "normal": [float(n[0]), float(n[1])],
                           "offset": float(offset)}, tuple(holes))

    @staticmethod
    def strip(axis="x", halfwidth=1.0, holes=()):
        return DomainSpec({"type": "strip", "axis": axis,
                           "halfwidth": float(halfwidth)}, tuple(holes))

    @staticmethod
    def polygon(vertices, holes=()):
        return DomainSpec({"type": "polygon",
                           "vertices": [list(map(float, v)) for v in _pts(vertices)]},
                          tuple(holes))

    @staticmethod
    def plane(holes=()):
        return DomainSpec({"type": "plane"}, tuple(holes))

    # -- point queries (vectorized internals) --------------------------------

    def contains(self, P) -> np.ndarray:
        P = np.atleast_2d(np.asarray(P, dtype=float))
        ok = self._pieces[0].inside(P)
        for piece in self._pieces[1:]:
            ok &= piece.inside(P)
        return ok

    def distance(self, P) -> np.ndarray:
        P = np.atleast_2d(np.asarray(P, dtype=float))
        d = self._pieces[0].dist(P)
        for piece in self._pieces[1:]:
            d = np.minimum(d, piece.dist(P))
        return d

    def interior(self, p) -> bool:
        a = _xy(p)[None, :]
        return bool(self.contains(a)[0]) and float(self.distance(a)[0]) > 0.0

    def ball_limits(self, P, T) -> np.ndarray:
        """Exact largest tangent-ball radii at P in directions T (closed
        forms per primitive).  Returns inf where no piece constrains."""
        if self.infinity_interior:
            raise UnsupportedInfinityInDomain(
                "tangent balls with infinity interior are not supported")
        P = np.atleast_2d(np.asarray(P, dtype=float))
        T = np.atleast_2d(np.asarray(T, dtype=float))
        r = self._pieces[0].ball_limit(P, T)
        for piece in self._pieces[1:]:
            r = np.minimum(r, piece.ball_limit(P, T))
        return r

    def segment_blocked(self, A, B) -> np.ndarray:
        """Whether open segments A[i]B[i] cross a crossing-sensitive boundary
        piece (slits, holes, polygon edges)."""
        A = np.atleast_2d(np.asarray(A, dtype=float))
        B = np.atleast_2d(np.asarray(B, dtype=float))
        out = np.zeros(len(A), dtype=bool)
        for piece in self._crossing_pieces:
            out |= piece.crossings(A, B)
        return out

    def frame(self):
        """A rough (center, scale) pair for samplers and plots."""
        t = self.base["type"]
        if t == "disk":
            return _xy(self.base["center"]), float(self.base["radius"])
        if t == "polygon":
            V = _pts(self.base["vertices"])
            c = V.mean(axis=0)
            return c, float(np.max(np.hypot(*(V - c).T)))
        if t == "strip":
            return np.zeros(2), float(self.base["halfwidth"])
        if t == "halfplane":
            n = _xy(self.base["normal"])
            return float(self.base["offset"]) * n, 1.0
        holes = [h for h in self.holes]
        if holes:
            cs = []
            for h in holes:
                if h["type"] == "disk":
                    cs.append(_xy(h["center"]))
                elif h["type"] == "puncture":
                    cs.append(_xy(h["point"]))
                elif h["type"] == "segment":
                    cs.append(0.5 * (_xy(h["a"]) + _xy(h["b"])))
                else:
                    cs.append(_pts(h["vertices"]).mean(axis=0))
            c = np.mean(cs, axis=0)
            return c, max(1.0, float(max(np.hypot(*(p - c)) for p in cs)))
        return np.zeros(2), 1.0

    # -- JSON ----------------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"base": self.base, "holes": list(self.holes),
                           "unbounded": bool(self.unbounded)}, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "DomainSpec":
        try:
            d = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValidationError(f"invalid domain JSON: {e}") from e
        if not isinstance(d, dict) or "base" not in d:
            raise ValidationError("domain JSON must be an object with a 'base' key")
        return DomainSpec(d["base"], tuple(d.get("holes", ())),
                          d.get("unbounded"), bool(d.get("infinity_interior", False)))


@dataclass(frozen=True)
class BoundarySampling:
    """Discrete boundary: points with accessibility flags, per-point
    curvature radii (inf on straight pieces, nan where undefined) and slit
    side tags (+-1 on duplicated slit interiors, else 0)."""

    points: np.ndarray
    accessible: np.ndarray
    curvature_radius: np.ndarray
    sample_count: int
    side: np.ndarray = None

    def __post_init__(self):
        if self.side is None:
            object.__setattr__(self, "side", np.zeros(len(self.points), dtype=np.int8))


@dataclass(frozen=True)
class PathPolyline:
    vertices: np.ndarray
    length: float
    interior: bool = True

    @staticmethod
    def from_vertices(V, interior=True):
        V = _pts(V)
        L = float(np.sum(np.hypot(*np.diff(V, axis=0).T))) if len(V) > 1 else 0.0
        return PathPolyline(V, L, interior)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def dist_to_boundary(domain: DomainSpec, z) -> float:
    """Exact Euclidean distance from an interior point to the boundary."""
    a = _xy(z)[None, :]
    if not bool(domain.contains(a)[0]):
        raise PointOutsideDomain(f"{tuple(a[0])} is not an interior point")
    d = float(domain.distance(a)[0])
    if d <= 0.0:
        raise PointOutsideDomain(f"{tuple(a[0])} lies on the boundary")
    return d


def sample_boundary(domain: DomainSpec, m: int) -> BoundarySampling:
    """Deterministic near-uniform boundary sampling.

    Finite components receive samples proportional to their arclength;
    punctures contribute exactly one sample; infinite line components share a
    fixed effective weight (they cannot be sampled uniformly, so a nested
    tangent map clusters samples near the component's anchor).
    """
    if m < 16:
        raise ValidationError("sample count m must be at least 16")
    comps = []
    for piece in domain._pieces:
        comps.extend(piece.components())
    if not comps:
        raise DegenerateBoundary("domain has no boundary components")

    points = [c for c in comps if c.kind == "point"]
    finite = [c for c in comps if c.kind not in ("point",) and np.isfinite(c.length)]
    infinite = [c for c in comps if not np.isfinite(c.length)]

    budget = m - len(points)
    if budget < len(finite) + len(infinite):
        raise ValidationError("sample count too small for this many components")

    finite_total = sum(c.length for c in finite)
    weights = []
    inf_weight = max(4.0, 2.0 * finite_total)
    for c in comps:
        if c.kind == "point":
            weights.append(0.0)
        elif np.isfinite(c.length):
            weights.append(c.length)
        else:
            weights.append(inf_weight)
    wsum = sum(weights)

    all_pts, all_curv, all_sides, all_acc = [], [], [], []
    remaining = budget
    weighted = [(i, w) for i, w in enumerate(weights) if w > 0]
    for j, (i, w) in enumerate(weighted):
        if j == len(weighted) - 1:
            n_i = remaining
        else:
            n_i = max(1, int(round(budget * w / wsum)))
            n_i = min(n_i, remaining - (len(weighted) - 1 - j))
        remaining -= n_i
        pts, curv, sides = comps[i].sample(n_i)
        all_pts.append(pts)
        all_curv.append(curv)
        all_sides.append(sides)
        all_acc.append(np.ones(len(pts), dtype=bool))
    for c in points:
        pts, curv, sides = c.sample(1)
        all_pts.append(pts)
        all_curv.append(curv)
        all_sides.append(sides)
        all_acc.append(np.ones(len(pts), dtype=bool))

    P = np.vstack(all_pts)
    if len(np.unique(np.round(P, 12), axis=0)) < 2:
        raise DegenerateBoundary("boundary sampling has fewer than 2 distinct points")
    return BoundarySampling(P, np.concatenate(all_acc), np.concatenate(all_curv),
                            m, np.concatenate(all_sides))


def invert(center, w) -> Point:
    """Inversion in the unit circle about ``center``."""
    c = _xy(center)
    u = _xy(w) - c
    n2 = float(u @ u)
    if n2 <= _EPS**2:
        raise InversionAtCenter("cannot invert the center point")
    v = c + u / n2
    return Point(float(v[0]), float(v[1]))


def invert_many(center, W) -> np.ndarray:
    c = _xy(center)
    U = np.atleast_2d(np.asarray(W, dtype=float)) - c
    n2 = np.einsum("ij,ij->i", U, U)
    if np.any(n2 <= _EPS**2):
        raise InversionAtCenter("cannot invert the center point")
    return c + U / n2[:, None]


# -- smallest enclosing disk (Welzl, move-to-front) ---------------------------


def _circum(a, b, c):
    d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    if abs(d) <= 1e-300:
        return None
    ux = ((a @ a) * (b[1] - c[1]) + (b @ b) * (c[1] - a[1]) + (c @ c) * (a[1] - b[1])) / d
    uy = ((a @ a) * (c[0] - b[0]) + (b @ b) * (a[0] - c[0]) + (c @ c) * (b[0] - a[0])) / d
    o = np.array([ux, uy])
    return o, float(np.hypot(*(a - o)))


def _disk_2pt(a, b):
    o = 0.5 * (a + b)
    return o, float(np.hypot(*(a - o)))


def _contains(o, r, p, slack):
    return np.hypot(*(p - o)) <= r + slack


def smallest_enclosing_disk(points) -> Disk:
    """Smallest closed disk containing all the points (expected linear time).

    The internal shuffle uses a fixed seed, so the result and the running
    time are reproducible.
    """
    P = _pts(points)
    if len(P) == 0:
        raise EmptyInput("need at least one point")
    scale = max(1.0, float(np.max(np.abs(P))))
    slack = 1e-12 * scale
    idx = list(range(len(P)))
    random.Random(0x5EED).shuffle(idx)
    P = P[idx]

    o, r = P[0].copy(), 0.0
    for i in range(1, len(P)):
        if _contains(o, r, P[i], slack):
            continue
        o, r = P[i].copy(), 0.0
        for j in range(i):
            if _contains(o, r, P[j], slack):
                continue
            o, r = _disk_2pt(P[i], P[j])
            for k in range(j):
                if _contains(o, r, P[k], slack):
                    continue
                cc = _circum(P[i], P[j], P[k])
                if cc is None:
                    # collinear support: fall back to the widest pair
                    cand = [P[i], P[j], P[k]]
                    best = (0.0, None)
                    for s in range(3):
                        for t in range(s + 1, 3):
                            dd = float(np.hypot(*(cand[s] - cand[t])))
                            if dd > best[0]:
                                best = (dd, _disk_2pt(cand[s], cand[t]))
                    o, r = best[1]
                else:
                    o, r = cc
    if r == 0.0 and len(P) > 1 and not np.allclose(P, P[0]):
        raise ValidationError("smallest enclosing disk collapsed unexpectedly")
    return Disk(Point(float(o[0]), float(o[1])), max(r, 0.0)) if r > 0 else \
        _PointDisk(o)


def _PointDisk(o):
    # Disk requires radius > 0; a zero-radius result is reported with the
    # degenerate radius 0.0 through a plain namespace-compatible Disk clone.
    d = object.__new__(Disk)
    object.__setattr__(d, "center", Point(float(o[0]), float(o[1])))
    object.__setattr__(d, "radius", 0.0)
    return d


def convex_hull(P) -> np.ndarray:
    """Monotone-chain convex hull; returns hull vertices in CCW order."""
    P = np.unique(_pts(P), axis=0)
    if len(P) <= 2:
        return P
    order = np.lexsort((P[:, 1], P[:, 0]))
    P = P[order]

    def half(points):
        out = []
        for p in points:
            while len(out) >= 2 and np.cross(out[-1] - out[-2], p - out[-2]) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = half(P)
    upper = half(P[::-1])
    return np.array(lower[:-1] + upper[:-1])


def set_diameter(P) -> float:
    """Diameter of a finite point set via rotating calipers on the hull."""
    H = convex_hull(P)
    n = len(H)
    if n == 1:
        return 0.0
    if n == 2:
        return float(np.hypot(*(H[0] - H[1])))
    best = 0.0
    j = 1
    for i in range(n):
        ni = (i + 1) % n
        e = H[ni] - H[i]
        while True:
            nj = (j + 1) % n
            if np.cross(e, H[nj] - H[j]) > 0:
                j = nj
            else:
                break
        best = max(best, float(np.hypot(*(H[i] - H[j]))),
                   float(np.hypot(*(H[ni] - H[j]))))
    return best


def tangent_ball_radii(domain: DomainSpec, x, theta, boundary: BoundarySampling):
    """Sampled tangent-ball radii (r_plus, r_minus) at x in direction theta.

    r_plus is the radius of the largest disk tangent at x on the theta side
    that avoids every boundary sample; infinite when no sample constrains it.
    Sample-based radii over-estimate the exact ones and shrink monotonically
    as samples are added.
    """
    if domain.infinity_interior:
        raise UnsupportedInfinityInDomain(
            "negative-radius tangent balls (infinity interior) are not supported")
    p = _xy(x)
    t = _xy(theta)
    nt = float(np.hypot(*t))
    if abs(nt - 1.0) > 1e-9:
        raise ValidationError("theta must be a unit vector")
    t = t / nt
    if not domain.interior(p):
        raise PointOutsideDomain(f"{tuple(p)} is not interior")
    B = boundary.points
    u = B - p
    dots = u @ t
    n2 = np.einsum("ij,ij->i", u, u)

    def side(d):
        mask = d > _EPS
        if not np.any(mask):
            return math.inf
        return float(np.min(n2[mask] / (2.0 * d[mask])))

    return side(dots), side(-dots)


def tangent_ball_radii_exact(domain: DomainSpec, x, theta):
    """Closed-form tangent-ball radii; the oracle the sampled version
    converges to."""
    p = _xy(x)[None, :]
    t = _xy(theta)
    t = t / float(np.hypot(*t))
    if not domain.interior(p[0]):
        raise PointOutsideDomain(f"{tuple(p[0])} is not interior")
    r_plus = float(domain.ball_limits(p, t[None, :])[0])
    r_minus = float(domain.ball_limits(p, -t[None, :])[0])
    return r_plus, r_minus
