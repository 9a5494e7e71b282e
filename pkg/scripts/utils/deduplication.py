"""
Facet Deduplication

Reduce a raw list of faces to its maximal members.

Matching criteria:
1. Exact duplicates collapse to one face
2. A face contained in another face is dominated and dropped
"""

from typing import Iterable


def face_key(face: Iterable[int]) -> tuple[int, ...]:
    """Lexicographic sort key of a vertex set (its sorted tuple)."""
    return tuple(sorted(face))


def deduplicate(faces: Iterable[Iterable[int]]) -> tuple[frozenset, ...]:
    """
    Return the inclusion-maximal faces, sorted lexicographically.

    The empty face survives only when nothing else is given.
    """
    unique = {frozenset(f) for f in faces}
    if not unique:
        return ()

    # Largest first: a face can only be dominated by a strictly larger one
    by_size = sorted(unique, key=lambda f: (-len(f), face_key(f)))

    kept: list[frozenset] = []
    for face in by_size:
        if any(face < other for other in kept):
            continue
        kept.append(face)

    return tuple(sorted(kept, key=face_key))


if __name__ == "__main__":
    raw = [[1, 2], [1], [2], [2, 1], [3]]
    result = deduplicate(raw)
    print(f"Deduped: {len(raw)} -> {len(result)}")
    for face in result:
        print(f"  - {face_key(face)}")
