#!/usr/bin/env python3
"""Independent cross-check of the bundled fixture corpus.

Re-implements the cleaning and scoring rules from scratch (no shared code
with the C++ library) and recomputes the label counts for the bundled
61-tweet corpus. Run from the repository root:

    python3 scripts/verify_fixture_corpus.py

Exits nonzero if the recomputed counts or report lines disagree with the
frozen expectations used by the test suite.
"""

import json
import string
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent
DATA = REPO / "data"

EXPECTED_COUNTS = (10, 44, 7)  # positive, negative, neutral
EXPECTED_LINES = [
    "Positive tweets percentage: 16.39 %",
    "Negative tweets percentage: 72.13 %",
    "Neutral tweets percentage: 11.47 %",
]

ASCII_PUNCT = set(string.punctuation)
WORD_CHARS = set(string.ascii_letters + string.digits + "_")

# Unicode whitespace code points recognised by the tokenizer.
UNICODE_SPACES = {
    0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x20, 0x85, 0xA0, 0x1680,
    *range(0x2000, 0x200B), 0x2028, 0x2029, 0x202F, 0x205F, 0x3000,
}


def ascii_lower(s: str) -> str:
    return "".join(chr(ord(c) + 32) if "A" <= c <= "Z" else c for c in s)


def load_lexicon(path: Path) -> dict:
    lex = {}
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        term, valence = line.split("\t")
        term = ascii_lower(term)
        if term in lex:
            raise SystemExit(f"duplicate lexicon term: {term}")
        v = float(valence)
        if v == 0 or abs(v) > 1:
            raise SystemExit(f"valence out of range for {term}")
        lex[term] = v
    return lex


def load_lines(path: Path) -> list:
    out = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def load_abbreviations(path: Path) -> dict:
    table = {}
    for line in load_lines(path):
        abbr, expansion = line.split("\t")
        table[ascii_lower(abbr)] = expansion
    return table


def split_chunks(text: str) -> list:
    """Split on Unicode whitespace, keeping start offsets."""
    chunks, cur, start = [], [], None
    for i, ch in enumerate(text):
        if ord(ch) in UNICODE_SPACES:
            if cur:
                chunks.append(("".join(cur), start))
                cur, start = [], None
        else:
            if not cur:
                start = i
            cur.append(ch)
    if cur:
        chunks.append(("".join(cur), start))
    return chunks


def classify_chunk(chunk: str, emoticons: set):
    """Returns (kind, surface) or None for a whitespace-free chunk."""
    low = ascii_lower(chunk)
    if low.startswith("http://") or low.startswith("https://"):
        return ("url", chunk)
    if len(chunk) >= 2 and chunk[0] in "@#" and chunk[1] in WORD_CHARS:
        end = 1
        while end < len(chunk) and chunk[end] in WORD_CHARS:
            end += 1
        kind = "mention" if chunk[0] == "@" else "hashtag"
        return (kind, ascii_lower(chunk[:end]))
    if chunk in emoticons:
        return ("emoticon", chunk)
    stripped = chunk.strip("".join(ASCII_PUNCT))
    if not stripped:
        return None
    if stripped != chunk:
        return classify_chunk(stripped, emoticons)
    return ("word", ascii_lower(chunk))


def tokenize(text: str, emoticons: set) -> list:
    tokens = []
    for chunk, _ in split_chunks(text):
        tok = classify_chunk(chunk, emoticons)
        if tok is not None:
            tokens.append(tok)
    return tokens


def clean(text: str, stopwords: set, abbrevs: dict, emoticons: set) -> list:
    """Returns the surfaces of the cleaned (word or emoticon) tokens."""
    lowered = ascii_lower(text)
    tokens = tokenize(lowered, emoticons)
    # Drop links and mentions, unwrap hashtags, drop retweet markers.
    kept = []
    for kind, surface in tokens:
        if kind in ("url", "mention"):
            continue
        if kind == "hashtag":
            kind, surface = "word", surface[1:]
        if kind == "word" and surface == "rt":
            continue
        kept.append((kind, surface))
    # Expand abbreviations (single pass, whole word tokens only).
    expanded = []
    for kind, surface in kept:
        if kind == "word" and surface in abbrevs:
            expanded.extend(tokenize(ascii_lower(abbrevs[surface]), emoticons))
        else:
            expanded.append((kind, surface))
    # Remove stop words.
    return [
        (kind, surface)
        for kind, surface in expanded
        if not (kind == "word" and surface in stopwords)
    ]


def score(tokens: list, lexicon: dict):
    pos = neg = 0
    for _, surface in tokens:
        valence = lexicon.get(surface)
        if valence is None:
            continue
        if valence > 0:
            pos += 1
        else:
            neg += 1
    if pos > neg:
        return pos, neg, "positive"
    if neg > pos:
        return pos, neg, "negative"
    return pos, neg, "neutral"


def percent_trunc(n: int, total: int) -> str:
    hundredths = (10000 * n) // total
    return f"{hundredths // 100}.{hundredths % 100:02d}"


def main() -> int:
    lexicon = load_lexicon(DATA / "lexicon.tsv")
    stopwords = set(load_lines(DATA / "stopwords.txt"))
    abbrevs = load_abbreviations(DATA / "abbreviations.tsv")
    emoticons = set(load_lines(DATA / "emoticons.txt"))

    overlap = set(lexicon) & stopwords
    if overlap:
        print(f"FAIL: lexicon terms shadowed by stop words: {overlap}")
        return 1

    corpus = DATA / "corpora" / "fake_news_61.jsonl"
    counts = {"positive": 0, "negative": 0, "neutral": 0}
    seen_ids = set()
    for lineno, raw in enumerate(corpus.read_text(encoding="utf-8").splitlines(), 1):
        if not raw.strip():
            continue
        record = json.loads(raw)
        if record["id"] in seen_ids:
            print(f"FAIL: duplicate id at line {lineno}")
            return 1
        seen_ids.add(record["id"])
        if len(record["text"]) == 0 or len(record["text"]) > 280:
            print(f"FAIL: bad text length at line {lineno}")
            return 1
        tokens = clean(record["text"], stopwords, abbrevs, emoticons)
        _, _, label = score(tokens, lexicon)
        counts[label] += 1

    total = sum(counts.values())
    triple = (counts["positive"], counts["negative"], counts["neutral"])
    print(f"corpus: {total} tweets, (positive, negative, neutral) = {triple}")

    ok = True
    if triple != EXPECTED_COUNTS:
        print(f"FAIL: expected {EXPECTED_COUNTS}")
        ok = False

    lines = [
        f"Positive tweets percentage: {percent_trunc(triple[0], total)} %",
        f"Negative tweets percentage: {percent_trunc(triple[1], total)} %",
        f"Neutral tweets percentage: {percent_trunc(triple[2], total)} %",
    ]
    for line, expected in zip(lines, EXPECTED_LINES):
        marker = "ok" if line == expected else "MISMATCH"
        print(f"  {line}   [{marker}]")
        ok &= line == expected

    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
