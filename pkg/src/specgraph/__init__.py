"""specgraph: typed attributed graphs, contract generation, and
embedding-based matching for imperative programs and their annotations."""

__version__ = "0.1.0"
