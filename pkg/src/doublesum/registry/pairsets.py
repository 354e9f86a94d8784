"""Pair id lists used as the ``pair`` axis of the pair-generic identities."""
from __future__ import annotations

GENERIC = (
    "pair:ones-delta",
    "pair:alternating-power2",
    "pair:bernoulli-signed",
    "pair:bernoulli-2",
    "pair:gibonacci-shift(g0=2,g1=1,r=3)",
    "pair:harmonic-r(r=2)",
    "pair:odd-harmonic",
    "pair:catalan-floor",
    "pair:power-stirling(r=4)",
    "pair:horadam(a=2,b=1/3,p=3/2,q=1/2)",
    "pair:bernoulli-poly(x=1/2,y=1/3)",
    "pair:mstep-half(seed=[1;-2;5])",
    "pair:beta-power(r=1/2,m=2)",
)

# a lighter set for the identities with two pair axes or deep grids
SMALL = (
    "pair:ones-delta",
    "pair:bernoulli-signed",
    "pair:gibonacci-shift(g0=2,g1=1,r=3)",
    "pair:harmonic-r(r=1)",
    "pair:horadam(a=2,b=1/3,p=3/2,q=1/2)",
)

SELF_INVERSE = (
    "pair:bernoulli-signed",
    "pair:bernoulli-genocchi",
    "pair:catalan-donaghey",
    "pair:catalan-odd-harmonic",
    "pair:gibonacci-shift(g0=2,g1=1,r=0)",
)

ANTI_SELF_INVERSE = (
    "pair:gibonacci-shift(g0=0,g1=1,r=0)",
    "pair:gibonacci-shift(g0=0,g1=3,r=0)",
)
