from typing import Iterable, List

try:
    from rapidfuzz import process, fuzz
    RAPIDFUZZ_AVAILABLE = True
except ImportError:
    from difflib import get_close_matches
    RAPIDFUZZ_AVAILABLE = False


def suggest(query: str, names: Iterable[str], limit: int = 3, score_cutoff: float = 60) -> List[str]:
    """Closest known names to a misspelled builder family or statement id."""
    if not query:
        return []
    names = list(dict.fromkeys(names))

    if RAPIDFUZZ_AVAILABLE:
        results = process.extract(
            query,
            names,
            scorer=fuzz.WRatio,
            limit=limit,
        )
        return [name for name, score, _ in results if score >= score_cutoff]
    return get_close_matches(query, names, n=limit, cutoff=0.6)
