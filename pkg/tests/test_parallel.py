"""Worker-count invariance: identical results for any jobs value."""

from hgs.catalog import resolve_spec
from hgs.counting import count_byott
from hgs.holomorph import regular_subgroups_in_holomorph


def test_byott_counts_do_not_depend_on_jobs():
    V4, C4 = resolve_spec("V4"), resolve_spec("C4")
    serial = regular_subgroups_in_holomorph(V4, C4)
    parallel = regular_subgroups_in_holomorph(V4, C4, jobs=2)
    assert (serial.pair_count, serial.subgroup_count) == \
        (parallel.pair_count, parallel.subgroup_count)


def test_byott_value_matches_across_jobs():
    C8 = resolve_spec("C8")
    D4 = resolve_spec("D4")
    assert count_byott(C8, D4, jobs=1).value == count_byott(C8, D4, jobs=2).value


def test_parallel_checkpoint_writes(tmp_path):
    from hgs.holomorph import Checkpoint
    V4, C4 = resolve_spec("V4"), resolve_spec("C4")
    path = tmp_path / "par.ckpt"
    run = regular_subgroups_in_holomorph(V4, C4, checkpoint_path=path, jobs=2)
    ck = Checkpoint.read(path)
    assert ck.pair_count == run.pair_count
    assert ck.f_index == run.f_total - 1
