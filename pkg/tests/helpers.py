from app.services.rings.literals import parse_element, parse_ring_spec

Z = parse_ring_spec("Z")
F2 = parse_ring_spec("GF(2)[x]")
F3 = parse_ring_spec("GF(3)[x]")
ZI = parse_ring_spec("Z[i]")
L5 = parse_ring_spec("Z_(5)")
L7 = parse_ring_spec("Z_(7)")
S2 = parse_ring_spec("Z[1/2]")
S3 = parse_ring_spec("Z[1/3]")
S23 = parse_ring_spec("Z[1/2,3]")
ZX = parse_ring_spec("Z[x]")

PIDS = [Z, F2, F3, ZI, L5, S2, S23]
SEMIPRIMITIVE = [Z, F2, F3, ZI, S2, S23]


def el(ring, text):
    return parse_element(ring, str(text))


def els(ring, *texts):
    return [el(ring, t) for t in texts]


def max_degree_setting(_):
    """Module-level so worker processes can unpickle it."""
    from app.core.config import settings

    return settings.MAX_DEGREE
