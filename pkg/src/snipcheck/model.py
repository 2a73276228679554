"""Core domain types shared across the pipeline."""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class PostType(str, Enum):
    QUESTION = "question"
    ANSWER = "answer"


class Language(str, Enum):
    CSHARP = "csharp"
    JAVA = "java"
    JAVASCRIPT = "javascript"
    PYTHON = "python"

    @property
    def statically_typed(self) -> bool:
        return self in (Language.CSHARP, Language.JAVA)


@dataclass(frozen=True)
class Post:
    """One row of the posts table (question or answer).

    Invariants: only questions carry tags and accepted_answer_id; answers
    carry parent_id.
    """

    id: int
    post_type: PostType
    body: str
    accepted_answer_id: int | None = None
    parent_id: int | None = None
    tags: tuple[str, ...] = ()
    score: int = 0
    view_count: int | None = None
    owner_reputation: int | None = None
    creation_date: dt.date | None = None
    title: str = ""

    def to_record(self) -> dict[str, Any]:
        rec: dict[str, Any] = {
            "id": self.id,
            "post_type": self.post_type.value,
            "body": self.body,
            "accepted_answer_id": self.accepted_answer_id,
            "parent_id": self.parent_id,
            "tags": list(self.tags),
            "score": self.score,
            "view_count": self.view_count,
            "owner_reputation": self.owner_reputation,
            "creation_date": self.creation_date.isoformat() if self.creation_date else None,
            "title": self.title,
        }
        return rec

    @classmethod
    def from_record(cls, rec: dict[str, Any]) -> "Post":
        date = rec.get("creation_date")
        return cls(
            id=rec["id"],
            post_type=PostType(rec["post_type"]),
            body=rec["body"],
            accepted_answer_id=rec.get("accepted_answer_id"),
            parent_id=rec.get("parent_id"),
            tags=tuple(rec.get("tags") or ()),
            score=rec.get("score", 0),
            view_count=rec.get("view_count"),
            owner_reputation=rec.get("owner_reputation"),
            creation_date=dt.date.fromisoformat(date) if date else None,
            title=rec.get("title", ""),
        )


@dataclass(frozen=True)
class Snippet:
    """One extracted code block with language identity and provenance.

    snippet_id is '<answer_id>#<block_index>', so (answer_id, block_index)
    uniqueness comes for free.
    """

    snippet_id: str
    question_id: int
    answer_id: int
    language: Language
    text: str
    block_index: int

    @classmethod
    def make(cls, question_id: int, answer_id: int, language: Language,
             text: str, block_index: int) -> "Snippet":
        return cls(
            snippet_id=f"{answer_id}#{block_index}",
            question_id=question_id,
            answer_id=answer_id,
            language=language,
            text=text,
            block_index=block_index,
        )

    def to_record(self) -> dict[str, Any]:
        return {
            "snippet_id": self.snippet_id,
            "question_id": self.question_id,
            "answer_id": self.answer_id,
            "language": self.language.value,
            "text": self.text,
            "block_index": self.block_index,
        }

    @classmethod
    def from_record(cls, rec: dict[str, Any]) -> "Snippet":
        return cls(
            snippet_id=rec["snippet_id"],
            question_id=rec["question_id"],
            answer_id=rec["answer_id"],
            language=Language(rec["language"]),
            text=rec["text"],
            block_index=rec["block_index"],
        )


@dataclass
class Diagnostics:
    """Tally of rows/spans dropped while streaming a dump. Never aborts a stream."""

    rows_read: int = 0
    rows_skipped: int = 0
    other_post_types: int = 0
    unclosed_code_spans: int = 0
    empty_code_blocks: int = 0
    dangling_accepted: int = 0
    untagged_or_ambiguous: int = 0
    extra: dict[str, int] = field(default_factory=dict)

    def bump(self, key: str, n: int = 1) -> None:
        self.extra[key] = self.extra.get(key, 0) + n

    def as_dict(self) -> dict[str, int]:
        out = {
            "rows_read": self.rows_read,
            "rows_skipped": self.rows_skipped,
            "other_post_types": self.other_post_types,
            "unclosed_code_spans": self.unclosed_code_spans,
            "empty_code_blocks": self.empty_code_blocks,
            "dangling_accepted": self.dangling_accepted,
            "untagged_or_ambiguous": self.untagged_or_ambiguous,
        }
        out.update(self.extra)
        return out
