from vlk.rng import MASK64, Lcg64, splitmix64


def test_splitmix_reference_value():
    # first output of the reference SplitMix64 stream seeded with 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF


def test_next32_is_high_half_of_lcg_step():
    r = Lcg64(99)
    s0 = r.state
    v = r.next32()
    assert v == ((s0 * 6364136223846793005 + 1442695040888963407) & MASK64) >> 32


def test_permutation_is_deterministic_and_a_permutation():
    p = Lcg64(5).permutation(20)
    assert p == Lcg64(5).permutation(20)
    assert sorted(p) == list(range(20))


def test_small_seeds_are_decorrelated():
    second = {Lcg64(s).below(2) == Lcg64(s).below(2) for s in range(16)}
    draws = []
    for s in range(64):
        r = Lcg64(s)
        r.below(2)
        draws.append(r.below(2))
    assert 0 < sum(draws) < 64
    assert second == {True}
