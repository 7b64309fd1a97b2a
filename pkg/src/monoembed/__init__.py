"""Toolchain for decomposing Java monoliths into microservice candidates.

The pipeline has file-based stages: parse a source tree into a class corpus,
embed the classes (deterministic baselines, a remote embedding endpoint, or a
locally trained contrastive projection), cluster the standardized embeddings
into a decomposition, and score both the embeddings and the decomposition.
"""

__version__ = "0.1.0"
