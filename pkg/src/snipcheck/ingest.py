"""Stream a Stack-Exchange-style posts dump into language-tagged snippets.

The dump convention is one self-closing ``<row .../>`` element per post.
Rows are parsed individually so a malformed row is skipped and counted
instead of aborting the stream; memory stays bounded by one row plus the
question/accepted-answer index, never by total body text.
"""

from __future__ import annotations

import datetime as dt
import html
import re
import xml.etree.ElementTree as ET
from collections.abc import Callable, Iterable, Iterator
from typing import IO

from snipcheck.model import Diagnostics, Language, Post, PostType, Snippet

# Conservative tag -> language mapping; overridable per config to avoid
# cross-language contamination (e.g. node.js is deliberately not JavaScript).
DEFAULT_TAG_MAP: dict[Language, frozenset[str]] = {
    Language.JAVA: frozenset({"java"}),
    Language.CSHARP: frozenset({"c#"}),
    Language.JAVASCRIPT: frozenset({"javascript"}),
    Language.PYTHON: frozenset({"python", "python-2.7", "python-3.x"}),
}

_ROW_START = re.compile(r"<row\b")
_TAG_ANGLE = re.compile(r"<([^<>]+)>")
_CODE_OPEN = re.compile(r"<code(?:\s[^>]*)?>")
_CODE_CLOSE = "</code>"


def _parse_int(value: str | None) -> int | None:
    if value is None:
        return None
    try:
        return int(value)
    except ValueError:
        return None


def parse_tags(raw: str) -> tuple[str, ...]:
    """Split a dump Tags attribute (``<java><string>`` or ``|java|string|``)."""
    if not raw:
        return ()
    angle = _TAG_ANGLE.findall(raw)
    if angle:
        return tuple(t.lower() for t in angle)
    return tuple(t.lower() for t in raw.split("|") if t)


def _post_from_row(elem: ET.Element) -> Post | None:
    attrs = elem.attrib
    post_id = _parse_int(attrs.get("Id"))
    type_id = attrs.get("PostTypeId")
    if post_id is None or type_id not in ("1", "2"):
        return None
    date = None
    raw_date = attrs.get("CreationDate")
    if raw_date:
        try:
            date = dt.date.fromisoformat(raw_date[:10])
        except ValueError:
            date = None
    if type_id == "1":
        return Post(
            id=post_id,
            post_type=PostType.QUESTION,
            body=attrs.get("Body", ""),
            accepted_answer_id=_parse_int(attrs.get("AcceptedAnswerId")),
            tags=parse_tags(attrs.get("Tags", "")),
            score=_parse_int(attrs.get("Score")) or 0,
            view_count=_parse_int(attrs.get("ViewCount")),
            owner_reputation=_parse_int(attrs.get("OwnerReputation")),
            creation_date=date,
            title=html.unescape(attrs.get("Title", "")),
        )
    return Post(
        id=post_id,
        post_type=PostType.ANSWER,
        body=attrs.get("Body", ""),
        parent_id=_parse_int(attrs.get("ParentId")),
        score=_parse_int(attrs.get("Score")) or 0,
        view_count=_parse_int(attrs.get("ViewCount")),
        owner_reputation=_parse_int(attrs.get("OwnerReputation")),
        creation_date=date,
    )


def parse_dump_stream(source: IO[str] | IO[bytes] | Iterable[str],
                      diagnostics: Diagnostics | None = None) -> Iterator[Post]:
    """Yield one Post per well-formed row, in file order.

    Malformed rows (bad XML, missing Id, truncated final line) are skipped
    and tallied; rows for post types other than question/answer are counted
    separately. Constant memory w.r.t. file size.
    """
    diag = diagnostics if diagnostics is not None else Diagnostics()
    for raw_line in source:
        line = raw_line.decode("utf-8", "replace") if isinstance(raw_line, bytes) else raw_line
        stripped = line.strip()
        if not _ROW_START.match(stripped):
            continue
        diag.rows_read += 1
        try:
            elem = ET.fromstring(stripped)
        except ET.ParseError:
            diag.rows_skipped += 1
            continue
        if elem.tag != "row":
            diag.rows_skipped += 1
            continue
        post = _post_from_row(elem)
        if post is None:
            if elem.get("PostTypeId") not in ("1", "2") and elem.get("Id") is not None:
                diag.other_post_types += 1
            else:
                diag.rows_skipped += 1
            continue
        yield post


PostSource = Iterable[Post] | Callable[[], Iterable[Post]]


def link_accepted_pairs(posts: PostSource,
                        diagnostics: Diagnostics | None = None,
                        ) -> Iterator[tuple[Post, Post]]:
    """Join questions to their accepted answers, in any stream order.

    Pass 1 collects only the accepted_answer_id -> question_id index; pass 2
    streams rows again, buffering each side of a pair only until its partner
    flows by (dumps are id-ordered, so a question rarely waits long).
    Questions whose accepted answer never appears are dropped and counted.
    """
    diag = diagnostics if diagnostics is not None else Diagnostics()
    if callable(posts):
        first_pass: Iterable[Post] = posts()
        second_pass: Iterable[Post] = posts()
    else:
        materialized = list(posts)
        first_pass = materialized
        second_pass = materialized

    accepted_of: dict[int, int] = {}  # accepted answer id -> question id
    for post in first_pass:
        if post.post_type is PostType.QUESTION and post.accepted_answer_id is not None:
            accepted_of[post.accepted_answer_id] = post.id

    waiting_questions: dict[int, Post] = {}  # accepted answer id -> question
    waiting_answers: dict[int, Post] = {}  # answer id -> answer
    for post in second_pass:
        if post.post_type is PostType.QUESTION:
            acc = post.accepted_answer_id
            if acc is None:
                continue
            answer = waiting_answers.pop(acc, None)
            if answer is not None:
                yield post, answer
            else:
                waiting_questions[acc] = post
        else:
            if post.id not in accepted_of:
                continue
            question = waiting_questions.pop(post.id, None)
            if question is not None:
                yield question, post
            else:
                waiting_answers[post.id] = post
    diag.dangling_accepted += len(waiting_questions)


def extract_code_blocks(body: str, diagnostics: Diagnostics | None = None) -> list[str]:
    """Return the contents of each ``<code>...</code>`` span in document order.

    HTML entities are decoded; original whitespace and newlines are kept.
    An opening tag with no matching close is ignored and counted.
    """
    diag = diagnostics if diagnostics is not None else Diagnostics()
    blocks: list[str] = []
    pos = 0
    while True:
        open_match = _CODE_OPEN.search(body, pos)
        if open_match is None:
            break
        close_at = body.find(_CODE_CLOSE, open_match.end())
        if close_at == -1:
            diag.unclosed_code_spans += 1
            pos = open_match.end()
            continue
        blocks.append(html.unescape(body[open_match.end():close_at]))
        pos = close_at + len(_CODE_CLOSE)
    return blocks


def language_of(tags: Iterable[str],
                tag_map: dict[Language, frozenset[str]] | None = None,
                ) -> Language | None:
    """Map question tags to a single target language.

    Returns None when zero or multiple languages match: ambiguous posts are
    excluded rather than double-counted.
    """
    mapping = tag_map or DEFAULT_TAG_MAP
    tag_set = set(tags)
    matches = [lang for lang, names in mapping.items() if tag_set & names]
    if len(matches) == 1:
        return matches[0]
    return None


def snippets_from_pair(question: Post, answer: Post,
                       diagnostics: Diagnostics | None = None,
                       tag_map: dict[Language, frozenset[str]] | None = None,
                       ) -> list[Snippet]:
    """Extract all snippets of a (question, accepted answer) pair.

    Each <code> span becomes a separate Snippet; blocks that decode to the
    empty string are dropped and counted.
    """
    diag = diagnostics if diagnostics is not None else Diagnostics()
    language = language_of(question.tags, tag_map)
    if language is None:
        diag.untagged_or_ambiguous += 1
        return []
    snippets = []
    for index, text in enumerate(extract_code_blocks(answer.body, diag)):
        if not text:
            diag.empty_code_blocks += 1
            continue
        snippets.append(Snippet.make(question.id, answer.id, language, text, index))
    return snippets


def iter_snippets(posts: PostSource,
                  languages: set[Language] | None = None,
                  diagnostics: Diagnostics | None = None,
                  tag_map: dict[Language, frozenset[str]] | None = None,
                  ) -> Iterator[tuple[Post, Post, Snippet]]:
    """End-to-end streaming extraction: (question, answer, snippet) triples."""
    diag = diagnostics if diagnostics is not None else Diagnostics()
    for question, answer in link_accepted_pairs(posts, diag):
        for snippet in snippets_from_pair(question, answer, diag, tag_map):
            if languages is None or snippet.language in languages:
                yield question, answer, snippet
