from jlkdist._persistence._bottleneck import bottleneck, bottleneck_matching
from jlkdist._persistence._diagram import (
    PersistenceDiagram,
    PersistencePair,
    diagrams_from_json,
    diagrams_to_json,
)
from jlkdist._persistence._interleaving import (
    InterleavingCertificate,
    certify_interleaving,
    interleaving_beta,
)
from jlkdist._persistence._oracle import betti_oracle
from jlkdist._persistence._reduction import compute_persistence
