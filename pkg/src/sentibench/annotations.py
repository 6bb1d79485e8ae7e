"""Reader for externally produced POS / typed-dependency annotation files.

File format (``<stem>.dep``): one token per line with five tab-separated
columns ``ID FORM POS HEAD DEPREL``; a blank line ends a sentence. ID is
1-based within the sentence and HEAD 0 marks the root. Lines starting
with ``#`` are comments.

POS tags are reduced to the coarse set ``ADJ NOUN VERB ADV OTHER``:

======  ==========================================================
coarse  accepted input tags
======  ==========================================================
ADJ     JJ JJR JJS ADJ
NOUN    NN NNS NNP NNPS NOUN PROPN
VERB    VB VBD VBG VBN VBP VBZ MD VERB AUX
ADV     RB RBR RBS WRB ADV
OTHER   anything else
======  ==========================================================
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import AlignmentError, AnnotationParseError, TreeValidityError

COARSE_TAGS = ("ADJ", "NOUN", "VERB", "ADV", "OTHER")

_FINE_TO_COARSE = {}
for _coarse, _fine in {
    "ADJ": "JJ JJR JJS ADJ",
    "NOUN": "NN NNS NNP NNPS NOUN PROPN",
    "VERB": "VB VBD VBG VBN VBP VBZ MD VERB AUX",
    "ADV": "RB RBR RBS WRB ADV",
    "OTHER": "OTHER",
}.items():
    for _t in _fine.split():
        _FINE_TO_COARSE[_t] = _coarse


def coarse_tag(tag: str) -> str:
    return _FINE_TO_COARSE.get(tag.upper(), "OTHER")


@dataclass(frozen=True)
class TokenAnnotation:
    form: str
    pos: str
    head: int
    deprel: str


@dataclass(frozen=True)
class AnnotatedDocument:
    doc_id: int
    sentences: tuple[tuple[TokenAnnotation, ...], ...]

    def tokens(self):
        for sent in self.sentences:
            yield from sent

    def __len__(self):
        return sum(len(s) for s in self.sentences)


def validate_tree(sentence, line=None, path=None):
    """Check one root and that every head chain reaches it without a cycle."""
    n = len(sentence)
    roots = [i for i, tok in enumerate(sentence, 1) if tok.head == 0]
    if len(roots) != 1:
        raise TreeValidityError(f"sentence has {len(roots)} roots, expected exactly 1", line, path)
    # 0 = unvisited, 1 = on current path, 2 = known to reach the root
    state = [0] * (n + 1)
    state[0] = 2
    for start in range(1, n + 1):
        path_nodes = []
        node = start
        while state[node] == 0:
            state[node] = 1
            path_nodes.append(node)
            node = sentence[node - 1].head
        if state[node] == 1:
            raise TreeValidityError(f"dependency cycle through token {node}", line, path)
        for p in path_nodes:
            state[p] = 2


def parse_annotations(text: str, doc_id: int = 0, path=None) -> AnnotatedDocument:
    sentences = []
    current = []
    start_line = None

    def close():
        nonlocal current
        if current:
            tree = tuple(current)
            for i, tok in enumerate(tree, 1):
                if tok.head > len(tree):
                    raise AnnotationParseError(
                        f"HEAD {tok.head} of token {i} exceeds sentence length {len(tree)}", start_line + i - 1, path
                    )
            validate_tree(tree, start_line, path)
            sentences.append(tree)
        current = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\r\n")
        if line.startswith("#"):
            continue
        if not line.strip():
            close()
            continue
        cols = line.split("\t")
        if len(cols) != 5:
            raise AnnotationParseError(f"expected 5 tab-separated columns, got {len(cols)}", lineno, path)
        tid, form, pos, head, deprel = cols
        try:
            tid_i = int(tid)
            head_i = int(head)
        except ValueError:
            raise AnnotationParseError("ID and HEAD must be integers", lineno, path) from None
        if not current:
            start_line = lineno
        if tid_i != len(current) + 1:
            raise AnnotationParseError(f"expected ID {len(current) + 1}, got {tid_i}", lineno, path)
        if head_i < 0:
            raise AnnotationParseError(f"negative HEAD {head_i}", lineno, path)
        if not form or not deprel.strip():
            raise AnnotationParseError("FORM and DEPREL must be nonempty", lineno, path)
        current.append(TokenAnnotation(form, coarse_tag(pos), head_i, deprel.strip()))
    close()
    return AnnotatedDocument(doc_id, tuple(sentences))


def load_annotations(path, doc_id: int = 0) -> AnnotatedDocument:
    path = Path(path)
    return parse_annotations(path.read_text(encoding="utf-8"), doc_id, path)


def dump_annotations(doc: AnnotatedDocument) -> str:
    """Serialize back to the column format accepted by :func:`parse_annotations`."""
    blocks = []
    for sent in doc.sentences:
        blocks.append(
            "".join(f"{i}\t{t.form}\t{t.pos}\t{t.head}\t{t.deprel}\n" for i, t in enumerate(sent, 1))
        )
    return "\n".join(blocks)


def _annotation_path(annotation_dir: Path, doc):
    label_dir = annotation_dir / doc.label.value / f"{doc.stem}.dep"
    if label_dir.is_file():
        return label_dir
    flat = annotation_dir / f"{doc.stem}.dep"
    if flat.is_file():
        return flat
    return None


def align(dataset, annotation_dir) -> dict[int, AnnotatedDocument]:
    """Load one ``<stem>.dep`` per document.

    Files are looked up as ``<dir>/<label>/<stem>.dep`` (mirroring the
    corpus layout) and then ``<dir>/<stem>.dep``.
    """
    annotation_dir = Path(annotation_dir)
    found = {}
    missing = []
    for doc in dataset:
        p = _annotation_path(annotation_dir, doc)
        if p is None:
            missing.append(doc.stem)
        else:
            found[doc.id] = p
    if missing:
        raise AlignmentError(missing)
    return {doc_id: load_annotations(p, doc_id) for doc_id, p in found.items()}
