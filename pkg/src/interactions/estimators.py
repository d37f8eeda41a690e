"""Estimator-style wrappers for use inside scikit-learn pipelines.

``ConservedQuantityTransformer`` maps configurations (rows of local states,
one column per site) to their conserved sums. ``InteractionClassifier``
assigns interactions to classes of the exhaustive catalog.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .classify import MAX_KAPPA, classify, identify
from .consv import compute_consv
from .core import Interaction, InteractionError


def check_interaction(inter) -> Interaction:
    if not isinstance(inter, Interaction):
        raise TypeError(f"expected an Interaction, got {type(inter).__name__}")
    return inter


def check_configurations(X, n_states: int) -> np.ndarray:
    """Validate a 2-d array of state indices in 0..n_states-1."""
    X = check_array(X, dtype=np.int64, ensure_2d=True)
    if X.size and (X.min() < 0 or X.max() >= n_states):
        raise InteractionError(f"configuration entries must lie in 0..{n_states - 1}")
    return X


class ConservedQuantityTransformer(TransformerMixin, BaseEstimator):
    """Conserved sums of each configuration, one output column per basis vector.

    With ``exact=True`` the output is an object array of ``Fraction``.
    """

    def __init__(self, interaction=None, exact=False):
        self.interaction = interaction
        self.exact = exact

    def fit(self, X, y=None):
        inter = check_interaction(self.interaction)
        X = check_configurations(X, inter.size)
        self.basis_ = compute_consv(inter).vectors
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "basis_")
        X = check_configurations(X, self.interaction.size)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} sites, fitted with {self.n_features_in_}")
        if self.exact:
            out = np.empty((X.shape[0], len(self.basis_)), dtype=object)
            for r, v in enumerate(self.basis_):
                table = np.array(v, dtype=object)
                out[:, r] = [sum(table[row], Fraction(0)) for row in X]
            return out
        if not self.basis_:
            return np.zeros((X.shape[0], 0))
        table = np.array([[float(x) for x in v] for v in self.basis_])
        return table[:, X].sum(axis=2).T

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "basis_")
        return np.array([f"xi{r}" for r in range(len(self.basis_))], dtype=object)


class InteractionClassifier(BaseEstimator):
    """Assign each interaction to its equivalence class in the catalog for its size.

    ``fit`` loads the catalogs for the state-set sizes seen; nothing is learned.
    """

    def __init__(self, separable_only=False):
        self.separable_only = separable_only

    def fit(self, X, y=None):
        sizes = sorted({check_interaction(i).size for i in X})
        for size in sizes:
            if not 2 <= size <= MAX_KAPPA + 1:
                raise InteractionError(f"catalogs cover 2..{MAX_KAPPA + 1} states, got {size}")
        self.catalogs_ = {s: classify(s - 1, self.separable_only) for s in sizes}
        return self

    def _lookup(self, inter):
        check_is_fitted(self, "catalogs_")
        catalog = self.catalogs_.get(check_interaction(inter).size)
        if catalog is None:
            raise InteractionError(f"no catalog fitted for {inter.size} states")
        record = identify(inter)
        if record not in catalog.classes:
            return catalog, None
        return catalog, record

    def predict(self, X):
        """Class index within the fitted catalog, -1 when absent (separable_only)."""
        out = []
        for inter in X:
            catalog, record = self._lookup(inter)
            out.append(-1 if record is None else catalog.classes.index(record))
        return np.array(out, dtype=np.int64)

    def predict_names(self, X):
        return [None if rec is None else rec.name for _, rec in map(self._lookup, X)]
