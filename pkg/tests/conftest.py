from __future__ import annotations

import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from parenbraid.trees import Tree, all_trees
from parenbraid.words import A, SIGMA, Letter, Word

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("PARENBRAID_EXAMPLES", "60")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def letters(max_index: int = 4, positive: bool = False, families=(SIGMA, A)):
    signs = st.just(1) if positive else st.sampled_from((1, -1))
    return st.builds(Letter, st.sampled_from(families), st.integers(1, max_index), signs)


def words(max_len: int = 6, max_index: int = 4, positive: bool = False, families=(SIGMA, A)):
    return st.lists(letters(max_index, positive, families), max_size=max_len).map(Word)


def sigma_words(max_len: int = 6, max_index: int = 4, positive: bool = False):
    return words(max_len, max_index, positive, (SIGMA,))


def a_words(max_len: int = 6, max_index: int = 4, positive: bool = False):
    return words(max_len, max_index, positive, (A,))


def trees(max_leaves: int = 6):
    pool = [t for n in range(1, max_leaves + 1) for t in all_trees(n)]
    return st.sampled_from(pool)


def tree_list(max_leaves: int) -> list[Tree]:
    return [t for n in range(1, max_leaves + 1) for t in all_trees(n)]
