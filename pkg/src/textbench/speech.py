"""Audio-oriented annotations and SSML rendering.

Output is a single ``<speak>`` document in a vendor-neutral SSML 1.1 subset.
Element whitelist: speak, voice, break, emphasis, prosody, say-as, sub,
phoneme. Soft voice renders as ``prosody volume="soft"``; timbre maps onto
``prosody pitch``. Stripping all tags from the output recovers the source
text exactly. Actual speech synthesis sits behind a client interface whose
null implementation just writes the SSML to a file.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from xml.sax.saxutils import escape, quoteattr

from .errors import OverlapError, ParseError, SpanOutOfRange
from .metrics import analyze, analyze_tagged

ELEMENT_WHITELIST = frozenset(
    {"speak", "voice", "break", "emphasis", "prosody", "say-as", "sub", "phoneme"}
)

KINDS = ("break", "emphasis", "prosody", "soft_voice", "say_as", "substitute", "phoneme")
EMPHASIS_LEVELS = ("reduced", "moderate", "strong")
PROSODY_VOLUMES = ("silent", "x-soft", "soft", "medium", "loud", "x-loud")
PROSODY_RATES = ("x-slow", "slow", "medium", "fast", "x-fast")
PROSODY_PITCHES = ("x-low", "low", "medium", "high", "x-high")
SAY_AS_FORMATS = ("date", "telephone")
MAX_BREAK_MS = 10_000

# nesting order when spans coincide: outermost first
_KIND_DEPTH = {"prosody": 0, "soft_voice": 1, "emphasis": 2, "say_as": 3, "substitute": 3, "phoneme": 3}

_GENDERS = ("male", "female", "neutral")
_LOCALE_RE = re.compile(r"^[a-z]{2,3}(-[A-Z]{2})?$")


@dataclass(frozen=True)
class VoiceConfig:
    gender: str = "neutral"
    accent: str = "en-US"

    def validate(self) -> None:
        if self.gender not in _GENDERS:
            raise ValueError(f"gender must be one of {_GENDERS}, got {self.gender!r}")
        if not _LOCALE_RE.match(self.accent):
            raise ValueError(f"accent is not a valid locale tag: {self.accent!r}")


@dataclass(frozen=True)
class SpeechAnnotation:
    span: tuple[int, int]
    kind: str
    duration_ms: int | None = None       # break
    level: str | None = None             # emphasis
    volume: str | None = None            # prosody
    rate: str | None = None              # prosody
    pitch: str | None = None             # prosody
    format: str | None = None            # say_as
    alias: str | None = None             # substitute
    alphabet: str | None = None          # phoneme
    notation: str | None = None          # phoneme

    def validate(self, source_len: int) -> None:
        start, end = self.span
        if not (0 <= start <= end <= source_len):
            raise SpanOutOfRange(f"span {self.span} outside source of length {source_len}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown annotation kind {self.kind!r}")
        if self.kind == "break":
            if self.duration_ms is None or not (0 <= self.duration_ms <= MAX_BREAK_MS):
                raise ValueError(f"break duration must be in [0, {MAX_BREAK_MS}] ms")
        elif self.kind == "emphasis":
            if self.level not in EMPHASIS_LEVELS:
                raise ValueError(f"emphasis level must be one of {EMPHASIS_LEVELS}")
        elif self.kind == "prosody":
            if self.volume is None and self.rate is None and self.pitch is None:
                raise ValueError("prosody needs at least one of volume/rate/pitch")
            if self.volume is not None and self.volume not in PROSODY_VOLUMES:
                raise ValueError(f"volume must be one of {PROSODY_VOLUMES}")
            if self.rate is not None and self.rate not in PROSODY_RATES:
                raise ValueError(f"rate must be one of {PROSODY_RATES}")
            if self.pitch is not None and self.pitch not in PROSODY_PITCHES:
                raise ValueError(f"pitch must be one of {PROSODY_PITCHES}")
        elif self.kind == "say_as":
            if self.format not in SAY_AS_FORMATS:
                raise ValueError(f"say-as format must be one of {SAY_AS_FORMATS}")
        elif self.kind == "substitute":
            if not self.alias:
                raise ValueError("substitute needs an alias")
        elif self.kind == "phoneme":
            if not self.alphabet or not self.notation:
                raise ValueError("phoneme needs alphabet and notation")

    def as_dict(self) -> dict:
        data = {"span": list(self.span), "kind": self.kind}
        for key in ("duration_ms", "level", "volume", "rate", "pitch",
                    "format", "alias", "alphabet", "notation"):
            value = getattr(self, key)
            if value is not None:
                data[key] = value
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "SpeechAnnotation":
        kwargs = dict(data)
        kwargs["span"] = tuple(kwargs["span"])
        return cls(**kwargs)


# --- say-as detection -------------------------------------------------------

_GUARD_L = r"(?<!\d)(?<![\d][/.\-])"
_GUARD_R = r"(?!\d)(?![/.\-]\d)"

DATE_NUMERIC_CORE = r"(?:1[0-2]|0?[1-9])/(?:3[01]|[12]\d|0?[1-9])/(?:19|20)\d{2}"
_MONTHS = (
    "January|February|March|April|May|June|July|August|September|October|"
    "November|December|Jan|Feb|Mar|Apr|Jun|Jul|Aug|Sep|Sept|Oct|Nov|Dec"
)
DATE_TEXT_CORE = rf"(?:{_MONTHS})\.? (?:3[01]|[12]\d|0?[1-9]), (?:19|20)\d{{2}}"
PHONE_CORE = r"(?:\(\d{3}\) ?|\d{3}[-. ])\d{3}[-. ]\d{4}"

_DATE_NUMERIC_RE = re.compile(_GUARD_L + DATE_NUMERIC_CORE + _GUARD_R)
_DATE_TEXT_RE = re.compile(rf"\b{DATE_TEXT_CORE}{_GUARD_R}")
_PHONE_RE = re.compile(_GUARD_L + PHONE_CORE + _GUARD_R)


def detect_say_as(source_text: str) -> list[SpeechAnnotation]:
    """Non-overlapping date and telephone annotations from pattern matching."""
    raw: list[tuple[int, int, str]] = []
    for pattern, fmt in ((_DATE_NUMERIC_RE, "date"), (_DATE_TEXT_RE, "date"), (_PHONE_RE, "telephone")):
        for m in pattern.finditer(source_text):
            raw.append((m.start(), m.end(), fmt))
    raw.sort(key=lambda t: (t[0], -(t[1] - t[0])))
    chosen: list[tuple[int, int, str]] = []
    for start, end, fmt in raw:
        if any(start < e and s < end for s, e, _f in chosen):
            continue
        chosen.append((start, end, fmt))
    return [
        SpeechAnnotation(span=(s, e), kind="say_as", format=f)
        for s, e, f in sorted(chosen)
    ]


# --- abbreviation expansion -------------------------------------------------

def load_abbreviation_table(path) -> dict[str, str]:
    """TSV ``abbrev<TAB>expansion`` with ``#`` comments."""
    table: dict[str, str] = {}
    p = Path(path)
    for line_no, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParseError(p, line_no, "expected abbrev<TAB>expansion")
        table[parts[0].strip()] = parts[1].strip()
    return table


def detect_abbreviations(source_text: str, table: dict[str, str]) -> list[SpeechAnnotation]:
    """Substitute annotations for every standalone occurrence of an abbreviation."""
    annotations = []
    for abbrev in sorted(table, key=len, reverse=True):
        pattern = re.compile(rf"(?<!\w){re.escape(abbrev)}(?!\w)")
        for m in pattern.finditer(source_text):
            annotations.append(
                SpeechAnnotation(span=(m.start(), m.end()), kind="substitute", alias=table[abbrev])
            )
    annotations.sort(key=lambda a: a.span)
    deduped = []
    for ann in annotations:
        if any(ann.span[0] < p.span[1] and p.span[0] < ann.span[1] for p in deduped):
            continue
        deduped.append(ann)
    return deduped


# --- rendering ---------------------------------------------------------------

def _spans_overlap(a: SpeechAnnotation, b: SpeechAnnotation) -> bool:
    (s1, e1), (s2, e2) = a.span, b.span
    if s1 == s2 and e1 == e2:
        return True
    return s1 < e2 and s2 < e1


def _open_tag(ann: SpeechAnnotation) -> str:
    if ann.kind == "emphasis":
        return f"<emphasis level={quoteattr(ann.level)}>"
    if ann.kind == "prosody":
        attrs = "".join(
            f" {name}={quoteattr(value)}"
            for name, value in (("volume", ann.volume), ("rate", ann.rate), ("pitch", ann.pitch))
            if value is not None
        )
        return f"<prosody{attrs}>"
    if ann.kind == "soft_voice":
        return '<prosody volume="soft">'
    if ann.kind == "say_as":
        return f"<say-as interpret-as={quoteattr(ann.format)}>"
    if ann.kind == "substitute":
        return f"<sub alias={quoteattr(ann.alias)}>"
    if ann.kind == "phoneme":
        return f"<phoneme alphabet={quoteattr(ann.alphabet)} ph={quoteattr(ann.notation)}>"
    raise ValueError(ann.kind)


_CLOSE = {
    "emphasis": "</emphasis>",
    "prosody": "</prosody>",
    "soft_voice": "</prosody>",
    "say_as": "</say-as>",
    "substitute": "</sub>",
    "phoneme": "</phoneme>",
}


def render_ssml(source_text: str, annotations, voice: VoiceConfig | None = None) -> str:
    """Emit a well-formed ``<speak>`` document with annotations applied.

    Annotations are nested innermost-first by span containment; two spanned
    annotations that partially overlap without containment cannot nest in XML
    and raise OverlapError, as do same-kind overlaps. Breaks attach after
    their span. Output is independent of annotation input order.
    """
    annotations = list(annotations)
    for ann in annotations:
        ann.validate(len(source_text))
    if voice is not None:
        voice.validate()
    for i, a in enumerate(annotations):
        for b in annotations[i + 1:]:
            if a.kind != b.kind:
                continue
            if a.kind == "break":
                if a.span[1] == b.span[1]:  # same insertion point
                    raise OverlapError(f"two breaks attach at position {a.span[1]}")
            elif _spans_overlap(a, b):
                raise OverlapError(f"conflicting {a.kind} annotations at {a.span} and {b.span}")

    breaks = sorted(
        (a for a in annotations if a.kind == "break"),
        key=lambda a: (a.span[1], a.span[0]),
    )
    spanned = [a for a in annotations if a.kind != "break"]
    for i, a in enumerate(spanned):
        for b in spanned[i + 1:]:
            (s1, e1), (s2, e2) = a.span, b.span
            if s1 < e2 and s2 < e1:  # they intersect: require containment
                if not ((s1 <= s2 and e2 <= e1) or (s2 <= s1 and e1 <= e2)):
                    raise OverlapError(
                        f"annotations {a.kind}@{a.span} and {b.kind}@{b.span} "
                        "partially overlap and cannot nest"
                    )
    # sort outer-first: by start, longer span first, fixed kind depth for ties
    spanned.sort(key=lambda a: (a.span[0], -(a.span[1] - a.span[0]), _KIND_DEPTH.get(a.kind, 9)))

    break_iter = iter(breaks)
    next_break = next(break_iter, None)

    def emit_text(out: list[str], start: int, end: int) -> None:
        nonlocal next_break
        pos = start
        while next_break is not None and start <= next_break.span[1] <= end:
            b_pos = next_break.span[1]
            out.append(escape(source_text[pos:b_pos]))
            out.append(f'<break time="{next_break.duration_ms}ms"/>')
            pos = b_pos
            next_break = next(break_iter, None)
        out.append(escape(source_text[pos:end]))

    def emit(out: list[str], items: list[SpeechAnnotation], start: int, end: int) -> None:
        pos = start
        i = 0
        while i < len(items):
            ann = items[i]
            s, e = ann.span
            emit_text(out, pos, s)
            children = []
            j = i + 1
            while j < len(items) and items[j].span[0] >= s and items[j].span[1] <= e:
                children.append(items[j])
                j += 1
            out.append(_open_tag(ann))
            emit(out, children, s, e)
            out.append(_CLOSE[ann.kind])
            pos = e
            i = j
        emit_text(out, pos, end)

    body: list[str] = []
    emit(body, spanned, 0, len(source_text))
    while next_break is not None:  # breaks positioned at the very end
        body.append(f'<break time="{next_break.duration_ms}ms"/>')
        next_break = next(break_iter, None)
    content = "".join(body)
    if voice is not None:
        content = (
            f"<voice gender={quoteattr(voice.gender)} "
            f"languages={quoteattr(voice.accent)}>{content}</voice>"
        )
    return f"<speak>{content}</speak>"


def speech_text_metrics(tagged_or_text, bundle, config=None):
    """Same pipeline as regular analysis; exists so audio drafts are scored
    against the made-for-audio corpus profile by default."""
    if isinstance(tagged_or_text, str):
        return analyze(tagged_or_text, bundle, config)
    return analyze_tagged(tagged_or_text, bundle, config)


class TtsClient:
    """Interface for speech backends; live vendors are out of scope."""

    def synthesize(self, ssml: str, out_path) -> Path:
        raise NotImplementedError


class NullTtsClient(TtsClient):
    """Writes the SSML document to a file instead of producing audio."""

    def synthesize(self, ssml: str, out_path) -> Path:
        path = Path(out_path)
        path.write_text(ssml, encoding="utf-8")
        return path
