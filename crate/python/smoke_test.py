"""Smoke test for the `ncl` extension module.

Build it with `maturin develop -m crates/python/Cargo.toml`, or with
`cargo build -p ncl-python` and put `target/debug/libncl.so` on the path as
`ncl.so`.
"""

from fractions import Fraction

import ncl


def main():
    assert [len(ncl.enumerate_nc(n)) for n in range(1, 6)] == [1, 2, 5, 14, 42]
    assert [len(ncl.enumerate_ncl(n)) for n in range(1, 6)] == [1, 2, 6, 22, 90]
    assert len(ncl.enumerate_bicolor(3)) == len(ncl.enumerate_ncls(3)) == 7

    pi = ncl.NclPartition(12, [[1, 4, 6, 9], [2, 3], [4, 5], [6, 7, 8], [10, 11], [11, 12]])
    assert pi.connected_components().blocks == [[1, 4, 5, 6, 7, 8, 9], [2, 3], [10, 11, 12]]
    assert pi.exterior_blocks() == [[1, 4, 6, 9], [10, 11]]
    assert pi.non_minimal_elements() == [3, 5, 7, 8, 9, 12]
    assert ncl.NclPartition.from_json(pi.to_json()) == pi
    print(pi.render())

    gamma = ncl.NcPartition(4, [[1, 4], [2, 3]])
    assert len(gamma.blocks) + len(gamma.kreweras().blocks) == 5

    chain = ncl.NclPartition(3, [[1, 2], [2, 3]])
    tree = ncl.theta(chain)
    assert ncl.theta_inv(tree) == chain
    linked = ncl.NclPartition(8, [[1, 3, 7], [3, 5], [2], [4], [6], [8]])
    assert ncl.lambda_inv(ncl.lambda_(linked)) == linked
    try:
        ncl.theta(ncl.NclPartition(3, [[1, 2], [3]]))
    except ncl.DomainError:
        pass
    else:
        raise AssertionError("theta accepted a disconnected partition")

    m = [1, 2, 5, 14, 42]
    assert ncl.moments_to_cumulants(m) == [1, 1, 1, 1, 1]
    assert ncl.moments_to_tcoeffs(m) == [1, 1, 0, 0, 0]
    assert ncl.moments_to_tcoeffs(["2", "5", "14", "42"])[:3] == [2, Fraction(1, 2), Fraction(-1, 8)]
    assert all(isinstance(x, Fraction) for x in ncl.cumulants_to_moments([Fraction(1, 3), 2]))
    try:
        ncl.moments_to_tcoeffs([0, 1])
    except ncl.ZeroFirstMoment:
        pass
    else:
        raise AssertionError("zero first moment accepted")

    tx, ty = [1, 1, 0], [2, Fraction(1, 2), Fraction(-1, 8)]
    assert ncl.t_convolve(tx, ty) == [2, Fraction(5, 2), Fraction(3, 8)]
    my = ncl.cumulants_to_moments([2, 1, 0, 0, 0])
    report = ncl.verify_t_multiplicativity(m, my, 5)
    assert report["passed"], report
    assert report["via_cumulants"]["coeffs"][:3] == ["2", "5/2", "3/8"]

    suite = ncl.run_verification("fixtures")
    assert suite["passed"] and suite["failures"] == 0
    print("smoke test passed")


if __name__ == "__main__":
    main()
