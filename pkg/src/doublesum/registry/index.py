"""Cross-reference from source labels to registry ids, used for completeness checks."""
from __future__ import annotations

import json
import re
from collections import defaultdict

from .core import all_identities

_PREFIX = re.compile(r"^(?:eq|cor|thm|thrm|lem|prop)[.:]")

# every display label of the source text; the completeness test maps each one
DISPLAY_LABELS = (
    "Ber_bt",
    "Def-Horadam",
    "Harm_psi",
    "Hor_bin1",
    "Horadam_Binet",
    "anti_self",
    "b5uqn54",
    "bjpvnnv",
    "cmg5y2b",
    "cor.cp9d6at",
    "cor.eb6nqko",
    "cor.gca1g47",
    "cor_Ber_fin",
    "de8ucu6",
    "double_sum",
    "eeyr1j1",
    "eq.jupxl7y",
    "eq.wt34kp1",
    "eq:2ndpart12asdszdfw",
    "eq:2ndpart12asdszdfw_general",
    "eq:4.2_first_identity",
    "eq:ds_binom_generalss",
    "eq:ds_binom_generalss_b",
    "eq:duble_harmonic_ssigma_sdv3uiwrh",
    "eq:intermediate_identity",
    "eq:oolyn_s_sigma",
    "etio67p",
    "ey4kpm3",
    "g0638ke",
    "glq7t03",
    "gr3jv5j",
    "gs5dmhf",
    "gt3kuk2",
    "gxb8nr4",
    "h5ajier",
    "hctczju",
    "hmg5qf4",
    "i1hknxb",
    "ibhbsoo",
    "ih1affl",
    "int_cor",
    "jvjrby6",
    "jw8f41m",
    "kc11oa4",
    "l6wv97g",
    "lem.fwavfkb",
    "lem.pbovlru",
    "lem.sr1lpuj",
    "main_id1",
    "main_lem",
    "main_thm1",
    "mgi6qsx",
    "msdi8n1",
    "n5ooj8u",
    "nskd3u8",
    "oxhs032",
    "piuu548",
    "powers",
    "prop.ft6yauz",
    "prop.up76gra",
    "prwewl3",
    "qhaw2rp",
    "qtczn06",
    "qwgdu5z",
    "s4v4rqn",
    "sbl52oj",
    "self",
    "t6lc9ok",
    "thm.ef1drze",
    "thm.qtnqdr9",
    "thrm:btp_harmonic",
    "tv4r72c",
    "u0jw006",
    "utju7bn",
    "vm8tp3m",
    "vrhyzb2",
    "vsjufnd",
    "w8utb12",
    "wk165o9",
    "y56cnyf",
    "y7bhb70",
    "yxdoz00",
    "zir34uy",
)

# labels whose targets were renamed in the table
ALIASES = {
    "main_thm1": "main_id1",
    "eq:duble_harmonic_ssigma_sdv3uiwrh": "duble_harmonic",
}

# labels with no registry entry, and why
EXCLUDED = {
    "Harm_psi": "digamma relation; harmonic arguments are restricted to non-negative integers",
    "Horadam_Binet": "closed Binet form; Horadam terms come from the recurrence",
    "Def-Horadam": "recurrence definition; implemented by sequences.horadam and checked by property tests",
}


def normalize(label: str) -> str:
    label = ALIASES.get(label, label)
    return _PREFIX.sub("", label)


def label_index() -> dict[str, list[str]]:
    """Normalized label -> ids of the entries carrying it (as label or anchor)."""
    out: dict[str, list[str]] = defaultdict(list)
    for d in all_identities():
        for lab in {*d.labels, d.anchor}:
            out[normalize(lab)].append(d.id)
    return {k: sorted(v) for k, v in sorted(out.items())}


def uncovered(labels: list[str]) -> list[str]:
    """Labels that neither map to an entry nor are excluded on purpose."""
    idx = label_index()
    return [lab for lab in labels if lab not in EXCLUDED and normalize(lab) not in idx]


def index_json() -> str:
    payload = {
        "identities": [d.summary() for d in all_identities()],
        "labels": label_index(),
        "excluded": EXCLUDED,
    }
    return json.dumps(payload, indent=2, sort_keys=True)
