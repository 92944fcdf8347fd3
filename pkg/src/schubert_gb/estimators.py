"""Scikit-learn style decoder estimators.

The fit step does the expensive precomputation (parity checks, coset-leader
table, reduced Groebner basis) from a generator matrix; predict then decodes
batches of received words.  The classes follow the sklearn estimator
protocol (``get_params``/``set_params``, ``fit`` returning self, learned
attributes carrying a trailing underscore) without importing sklearn, so
they compose with its model-selection utilities via duck typing.
"""

from __future__ import annotations

import inspect

import numpy as np

from .decoding import DECODED, DecodeOutcome, gb_decode
from .groebner import ReducedGroebnerBasis, buchberger, capability, coset_engine, ideal_generators
from .linalg import CosetLeaderTable, LinearCode, build_coset_leader_table, syndrome, syndrome_decode
from .validation import check_is_fitted, check_words_array
from .words import mask_from_bits, monomial_from_string, word_from_string

BUCHBERGER_DEFAULT_MAX_VARS = 12


class _ParamsMixin:
    """get_params/set_params over the __init__ signature, as sklearn does."""

    @classmethod
    def _param_names(cls) -> list[str]:
        sig = inspect.signature(cls.__init__)
        return [p for p in sig.parameters if p != "self"]

    def get_params(self, deep: bool = True) -> dict:
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params):
        valid = self._param_names()
        for name, value in params.items():
            if name not in valid:
                raise ValueError(f"invalid parameter {name!r} for {type(self).__name__}")
            setattr(self, name, value)
        return self

    def __repr__(self) -> str:
        args = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({args})"


def _as_mask(word, n: int) -> int:
    """Accept a mask int, a binary/monomial string, or a 0/1 sequence."""
    if isinstance(word, (int, np.integer)):
        return int(word)
    if isinstance(word, str):
        stripped = word.strip()
        if set(stripped) <= {"0", "1"} and len(stripped) == n:
            return word_from_string(stripped)[0]
        return monomial_from_string(stripped)
    return mask_from_bits(np.asarray(word).astype(np.int64))


class GroebnerDecoder(_ParamsMixin):
    """Bounded-distance decoder backed by a reduced Groebner basis.

    Parameters
    ----------
    engine : 'auto' | 'coset' | 'buchberger'
        How to compute the basis on fit.  'auto' runs the reference
        Buchberger engine for small variable counts and the coset-leader
        engine otherwise.
    mode : 'bounded' | 'complete'
        'bounded' refuses words beyond the guarantee radius; 'complete'
        always decodes to the coset leader.
    max_buchberger_vars : guard for the reference engine.
    limit : optional enumeration-guard override (word count).

    Attributes (after fit)
    ----------------------
    code_ : LinearCode            basis_ : ReducedGroebnerBasis
    t_ : capability               n_features_in_ : code length
    """

    def __init__(
        self,
        engine: str = "auto",
        mode: str = "bounded",
        max_buchberger_vars: int = BUCHBERGER_DEFAULT_MAX_VARS,
        limit: int | None = None,
    ):
        self.engine = engine
        self.mode = mode
        self.max_buchberger_vars = max_buchberger_vars
        self.limit = limit
        self.code_: LinearCode | None = None
        self.basis_: ReducedGroebnerBasis | None = None
        self.t_: int | None = None
        self.n_features_in_: int | None = None

    def fit(self, X, y=None) -> "GroebnerDecoder":
        """Build the reduced basis from a k x n binary generator matrix X."""
        code = X if isinstance(X, LinearCode) else LinearCode.from_generator(X, p=2)
        if self.engine == "coset" or (
            self.engine == "auto" and code.n > self.max_buchberger_vars
        ):
            basis = coset_engine(code, limit=self.limit)
        elif self.engine in ("auto", "buchberger"):
            basis = buchberger(ideal_generators(code), max_vars=self.max_buchberger_vars)
        else:
            raise ValueError(f"unknown engine {self.engine!r}")
        self.code_ = code
        self.basis_ = basis
        self.t_ = capability(basis)
        self.n_features_in_ = code.n
        return self

    def decode(self, word) -> DecodeOutcome:
        """Full decode outcome for one received word (mask, string, or bits)."""
        check_is_fitted(self, "basis_")
        return gb_decode(_as_mask(word, self.code_.n), self.basis_, mode=self.mode)

    def predict(self, X) -> np.ndarray:
        """Decode rows of X; uncorrectable rows pass through unchanged.

        In 'complete' mode every row is corrected to a codeword, so nothing
        passes through.
        """
        check_is_fitted(self, "basis_")
        W = check_words_array(X, self.code_.n)
        out = np.empty_like(W)
        for r, row in enumerate(W):
            outcome = self.decode(mask_from_bits(row))
            mask = outcome.codeword if outcome.status == DECODED else mask_from_bits(row)
            out[r] = [(mask >> i) & 1 for i in range(self.code_.n)]
        return out

    def score(self, X, y) -> float:
        """Fraction of rows of X decoded exactly to the rows of y."""
        sent = check_words_array(y, self.code_.n)
        return float((self.predict(X) == sent).all(axis=1).mean())


class SyndromeTableDecoder(_ParamsMixin):
    """Classical syndrome decoder over the degrevlex coset-leader table.

    Complete decoding: every word is corrected by its coset leader.  Within
    the guarantee radius it agrees with :class:`GroebnerDecoder`.
    """

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.code_: LinearCode | None = None
        self.table_: CosetLeaderTable | None = None
        self.n_features_in_: int | None = None

    def fit(self, X, y=None) -> "SyndromeTableDecoder":
        code = X if isinstance(X, LinearCode) else LinearCode.from_generator(X, p=2)
        self.code_ = code
        self.table_ = build_coset_leader_table(code, limit=self.limit)
        self.n_features_in_ = code.n
        return self

    def decode(self, word) -> tuple[int, int]:
        """(codeword, error) for one received word."""
        check_is_fitted(self, "table_")
        w = _as_mask(word, self.code_.n)
        error = self.table_.leader(syndrome(w, self.code_))
        return w ^ error, error

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "table_")
        W = check_words_array(X, self.code_.n)
        out = np.empty_like(W)
        for r, row in enumerate(W):
            mask = syndrome_decode(mask_from_bits(row), self.table_, self.code_)
            out[r] = [(mask >> i) & 1 for i in range(self.code_.n)]
        return out

    def score(self, X, y) -> float:
        sent = check_words_array(y, self.code_.n)
        return float((self.predict(X) == sent).all(axis=1).mean())
