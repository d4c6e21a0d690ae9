//! Syndrome trellises: the Wolf construction, state profiles, spans,
//! trellis-oriented form, past/future subgroups, and DOT export.

use std::collections::BTreeSet;
use std::fmt;

use crate::code::{StabilizerCode, Syndrome};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::pauli::{Pauli, PauliString, PAULIS};

/// Enumeration guard for the past/future subgroups (test-sized codes only).
const SUBGROUP_GUARD_BITS: usize = 24;

/// A directed edge of section i, pointing from a vertex of level i-1 to a
/// vertex of level i, carrying a Pauli label.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: Pauli,
}

/// A sectioned labelled DAG whose root-to-goal paths are in bijection with
/// the coset of strings sharing one syndrome.
///
/// Vertices are identified by their partial-syndrome tag, a bit vector of
/// length n-k packed into a word. Levels and sections are stored in sorted
/// order, so two trellises of the same code and syndrome compare equal
/// bit for bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trellis {
    n: usize,
    num_checks: usize,
    levels: Vec<Vec<u64>>,
    sections: Vec<Vec<Edge>>,
    syndrome: Syndrome,
}

impl Trellis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn syndrome(&self) -> &Syndrome {
        &self.syndrome
    }

    /// Vertex tags of state space V_i, 0 <= i <= n, ascending.
    pub fn level(&self, i: usize) -> &[u64] {
        &self.levels[i]
    }

    /// Edges of section E_i, 1-based, sorted by (from, label).
    pub fn section(&self, i: usize) -> &[Edge] {
        &self.sections[i - 1]
    }

    pub fn num_vertices(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn num_edges(&self) -> usize {
        self.sections.iter().map(Vec::len).sum()
    }

    /// The state profile (log2 of every state-space size).
    pub fn state_profile(&self) -> Result<StateProfile> {
        let mut xi = Vec::with_capacity(self.n + 1);
        for (i, level) in self.levels.iter().enumerate() {
            let size = level.len();
            if !size.is_power_of_two() {
                return Err(Error::NonPowerOfTwoStateSpace { level: i, size });
            }
            xi.push(size.trailing_zeros());
        }
        Ok(StateProfile { xi })
    }

    /// All root-to-goal label sequences, in lexicographic order.
    /// Exponential in general; meant for tests on small codes.
    pub fn enumerate_paths(&self) -> Vec<PauliString> {
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0usize, Vec::new())];
        while let Some((i, v, prefix)) = stack.pop() {
            if i == self.n {
                out.push(PauliString::new(prefix));
                continue;
            }
            // push in reverse label order so the stack pops lexicographically
            let mut outgoing: Vec<&Edge> =
                self.sections[i].iter().filter(|e| e.from == v).collect();
            outgoing.sort_by_key(|e| std::cmp::Reverse(e.label));
            for e in outgoing {
                let mut next = prefix.clone();
                next.push(e.label);
                stack.push((i + 1, e.to, next));
            }
        }
        out
    }

    /// Renders the trellis as a DOT digraph, one rank per level, edges
    /// labelled with their Pauli symbol. Output order is deterministic.
    pub fn export_dot(&self) -> String {
        use fmt::Write;
        let mut out = String::new();
        let tag_bits = self.num_checks.max(1);
        let name = |i: usize, tag: u64| {
            let mut s = format!("v{i}_");
            for j in 0..tag_bits {
                s.push(if tag >> j & 1 == 1 { '1' } else { '0' });
            }
            s
        };
        writeln!(out, "digraph trellis {{").unwrap();
        writeln!(out, "  rankdir=LR;").unwrap();
        writeln!(out, "  node [shape=circle];").unwrap();
        for (i, level) in self.levels.iter().enumerate() {
            write!(out, "  {{ rank=same;").unwrap();
            for &tag in level {
                write!(out, " {};", name(i, tag)).unwrap();
            }
            writeln!(out, " }}").unwrap();
        }
        for (idx, section) in self.sections.iter().enumerate() {
            for e in section {
                writeln!(
                    out,
                    "  {} -> {} [label=\"{}\"];",
                    name(idx, self.levels[idx][e.from]),
                    name(idx + 1, self.levels[idx + 1][e.to]),
                    e.label
                )
                .unwrap();
            }
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

/// log2 state-space sizes (xi_0, ..., xi_n) of a trellis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateProfile {
    xi: Vec<u32>,
}

impl StateProfile {
    pub fn xi(&self) -> &[u32] {
        &self.xi
    }

    /// The state-space sizes |V_i| = 2^xi_i.
    pub fn sizes(&self) -> Vec<usize> {
        self.xi.iter().map(|&x| 1usize << x).collect()
    }
}

impl fmt::Display for StateProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.xi.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// First and last non-identity coordinate of a generator, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

/// The span (c(j), d(j)) of a generator. Errors on the all-I string.
pub fn span(g: &PauliString) -> Result<Span> {
    let mut first = None;
    let mut last = None;
    for (idx, &p) in g.coords().iter().enumerate() {
        if p != Pauli::I {
            first.get_or_insert(idx + 1);
            last = Some(idx + 1);
        }
    }
    match (first, last) {
        (Some(start), Some(end)) => Ok(Span { start, end }),
        _ => Err(Error::EmptySpan),
    }
}

/// Builds the Wolf trellis of a code for one syndrome.
///
/// Vertices at level i are partial-syndrome tags: bit j of a tag is
/// `star(S_j, truncated path labels)`. The forward sweep grows all
/// reachable tags level by level (the tag transition is a function of the
/// tag and the next label), then a backward sweep prunes every vertex that
/// cannot reach the goal tag, leaving exactly the coset's paths.
pub fn build_wolf_trellis(code: &StabilizerCode, s: &Syndrome) -> Result<Trellis> {
    let n = code.n();
    let m = code.num_generators();
    if s.len() != m {
        return Err(Error::LengthMismatch { expected: m, got: s.len() });
    }
    if m > 64 {
        return Err(Error::SizeGuardExceeded { actual: m, limit: 64 });
    }

    // delta[i][label] = tag increment contributed by placing `label` at
    // coordinate i+1.
    let delta: Vec<[u64; 4]> = (1..=n)
        .map(|i| {
            let mut d = [0u64; 4];
            for label in PAULIS {
                for j in 1..=m {
                    d[label.index()] |=
                        u64::from(code.generator(j).coord(i).star(label)) << (j - 1);
                }
            }
            d
        })
        .collect();

    // Forward sweep over reachable tags.
    let mut tag_levels: Vec<Vec<u64>> = vec![vec![0]];
    for d in &delta {
        let next: BTreeSet<u64> = tag_levels
            .last()
            .unwrap()
            .iter()
            .flat_map(|&v| PAULIS.iter().map(move |l| v ^ d[l.index()]))
            .collect();
        tag_levels.push(next.into_iter().collect());
    }

    // Backward sweep: keep only vertices from which the goal tag is
    // reachable.
    let goal = s.to_word();
    let mut keep: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); n + 1];
    keep[n].insert(goal);
    for i in (0..n).rev() {
        let d = &delta[i];
        keep[i] = tag_levels[i]
            .iter()
            .copied()
            .filter(|&v| PAULIS.iter().any(|l| keep[i + 1].contains(&(v ^ d[l.index()]))))
            .collect();
    }
    debug_assert!(keep[0].contains(&0), "the goal syndrome must be reachable");

    let levels: Vec<Vec<u64>> = keep.iter().map(|set| set.iter().copied().collect()).collect();
    let index_of = |i: usize, tag: u64| levels[i].binary_search(&tag).unwrap();
    let sections: Vec<Vec<Edge>> = (0..n)
        .map(|i| {
            let d = &delta[i];
            let mut edges = Vec::new();
            for (from_idx, &v) in levels[i].iter().enumerate() {
                for label in PAULIS {
                    let w = v ^ d[label.index()];
                    if keep[i + 1].contains(&w) {
                        edges.push(Edge {
                            from: from_idx,
                            to: index_of(i + 1, w),
                            label,
                        });
                    }
                }
            }
            edges
        })
        .collect();

    Ok(Trellis {
        n,
        num_checks: m,
        levels,
        sections,
        syndrome: s.clone(),
    })
}

fn start_symbol(g: &PauliString) -> Result<(usize, Pauli)> {
    let sp = span(g)?;
    Ok((sp.start, g.coord(sp.start)))
}

fn end_symbol(g: &PauliString) -> Result<(usize, Pauli)> {
    let sp = span(g)?;
    Ok((sp.end, g.coord(sp.end)))
}

/// Predicate for trellis-oriented form: at every column, at most two
/// generators start (resp. end) there, and when two do, their symbols at
/// that column differ.
pub fn is_trellis_oriented(code: &StabilizerCode) -> Result<bool> {
    for extract in [start_symbol, end_symbol] {
        let mut per_col: Vec<Vec<Pauli>> = vec![Vec::new(); code.n() + 1];
        for g in code.generators() {
            let (col, sym) = extract(g)?;
            per_col[col].push(sym);
        }
        for syms in &per_col {
            if syms.len() > 2 || (syms.len() == 2 && syms[0] == syms[1]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rewrites the stabilizer set into trellis-oriented form by row additions.
/// The output generates the same group S; only the generating set changes.
///
/// Two greedy phases of span reduction: first resolve span-start
/// collisions, then span-end collisions using only additions into the
/// earlier-starting row, which leaves the start structure intact. Same-
/// symbol merges strictly shrink a span, so both phases terminate.
pub fn trellis_oriented_form(code: &StabilizerCode) -> Result<StabilizerCode> {
    let mut rows: Vec<PauliString> = code.generators().to_vec();

    // Phase 1: starts.
    loop {
        if let Some((a, b)) = find_same_symbol_pair(&rows, start_symbol)? {
            // replace the longer-ending row so its span strictly shrinks
            let (da, db) = (span(&rows[a])?.end, span(&rows[b])?.end);
            let target = if (da, a) > (db, b) { a } else { b };
            let other = if target == a { b } else { a };
            rows[target] = rows[target].add(&rows[other])?;
        } else if let Some(cols) = find_triple(&rows, start_symbol)? {
            // three distinct symbols share a start column: fold the two
            // longest together, creating a same-symbol pair for the merge
            // above to resolve next round
            let mut by_end: Vec<usize> = cols;
            by_end.sort_by_key(|&r| span(&rows[r]).map(|s| s.end).unwrap_or(0));
            let (mid, last) = (by_end[1], by_end[2]);
            rows[last] = rows[last].add(&rows[mid])?;
        } else {
            break;
        }
    }

    // Phase 2: ends, preserving starts.
    loop {
        if let Some((a, b)) = find_same_symbol_pair(&rows, end_symbol)? {
            // replace the earlier-starting row: the other row is identity
            // before its own (later) start, so the target's start survives
            let (ca, cb) = (span(&rows[a])?.start, span(&rows[b])?.start);
            let target = if (ca, a) < (cb, b) { a } else { b };
            let other = if target == a { b } else { a };
            rows[target] = rows[target].add(&rows[other])?;
        } else if let Some(cols) = find_triple(&rows, end_symbol)? {
            let mut by_start: Vec<usize> = cols;
            by_start.sort_by_key(|&r| span(&rows[r]).map(|s| s.start).unwrap_or(usize::MAX));
            let (first, mid) = (by_start[0], by_start[1]);
            rows[first] = rows[first].add(&rows[mid])?;
        } else {
            break;
        }
    }

    let out = StabilizerCode::new(code.n(), rows)?;
    debug_assert!(is_trellis_oriented(&out)?);
    Ok(out)
}

type ColSym = fn(&PauliString) -> Result<(usize, Pauli)>;

fn find_same_symbol_pair(rows: &[PauliString], extract: ColSym) -> Result<Option<(usize, usize)>> {
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            if extract(&rows[a])? == extract(&rows[b])? {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

fn find_triple(rows: &[PauliString], extract: ColSym) -> Result<Option<Vec<usize>>> {
    let mut per_col: Vec<Vec<usize>> = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        let (col, _) = extract(row)?;
        per_col.resize(per_col.len().max(col + 1), Vec::new());
        per_col[col].push(r);
    }
    Ok(per_col.into_iter().find(|v| v.len() >= 3))
}

/// Elements of S-perp supported entirely on the first i coordinates
/// (the past subgroup). Enumeration only; guarded for test-sized codes.
pub fn past_subgroup(code: &StabilizerCode, i: usize) -> Result<Vec<PauliString>> {
    constrained_subgroup(code, |coord| coord > i)
}

/// Elements of S-perp supported entirely on the last n-i coordinates
/// (the future subgroup).
pub fn future_subgroup(code: &StabilizerCode, i: usize) -> Result<Vec<PauliString>> {
    constrained_subgroup(code, |coord| coord <= i)
}

/// Enumerates the subgroup of S-perp whose elements are identity on every
/// coordinate selected by `forced_identity`.
fn constrained_subgroup(
    code: &StabilizerCode,
    forced_identity: impl Fn(usize) -> bool,
) -> Result<Vec<PauliString>> {
    let n = code.n();
    let mut rows: Vec<Vec<bool>> = Vec::new();
    for g in code.generators() {
        let v = g.to_symplectic();
        let (x, z) = v.split_at(n);
        let mut row = z.to_vec();
        row.extend_from_slice(x);
        rows.push(row);
    }
    for coord in 1..=n {
        if forced_identity(coord) {
            for bit in [coord - 1, n + coord - 1] {
                let mut row = vec![false; 2 * n];
                row[bit] = true;
                rows.push(row);
            }
        }
    }
    let basis = BitMatrix::from_rows(&rows).null_space();
    if basis.len() > SUBGROUP_GUARD_BITS {
        return Err(Error::SizeGuardExceeded {
            actual: basis.len(),
            limit: SUBGROUP_GUARD_BITS,
        });
    }
    let gens: Vec<PauliString> = basis
        .iter()
        .map(|v| PauliString::from_symplectic(v))
        .collect::<Result<_>>()?;
    let mut elements = Vec::with_capacity(1 << gens.len());
    for mask in 0..1usize << gens.len() {
        let mut e = PauliString::identity(n);
        for (b, g) in gens.iter().enumerate() {
            if mask >> b & 1 == 1 {
                e = e.add(g)?;
            }
        }
        elements.push(e);
    }
    Ok(elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{four_qubit, five_qubit, ps, random_code};
    use std::collections::BTreeSet;

    fn single_x() -> StabilizerCode {
        StabilizerCode::new(1, vec![ps("X")]).unwrap()
    }

    #[test]
    fn figure1_profile() {
        let t = build_wolf_trellis(&four_qubit(), &Syndrome::zero(2)).unwrap();
        let profile = t.state_profile().unwrap();
        assert_eq!(profile.xi(), &[0, 2, 2, 2, 0]);
        assert_eq!(profile.sizes(), vec![1, 4, 4, 4, 1]);
    }

    #[test]
    fn figure2_profile() {
        let s: Syndrome = "0011".parse().unwrap();
        let t = build_wolf_trellis(&five_qubit(), &s).unwrap();
        let profile = t.state_profile().unwrap();
        assert_eq!(profile.xi(), &[0, 2, 2, 2, 1, 0]);
        assert_eq!(profile.sizes(), vec![1, 4, 4, 4, 2, 1]);
    }

    #[test]
    fn trivial_single_qubit_trellis() {
        let t = build_wolf_trellis(&single_x(), &Syndrome::zero(1)).unwrap();
        assert_eq!(t.state_profile().unwrap().xi(), &[0, 0]);
        let labels: Vec<Pauli> = t.section(1).iter().map(|e| e.label).collect();
        assert_eq!(labels, vec![Pauli::I, Pauli::X]);
    }

    #[test]
    fn path_bijection_all_syndromes() {
        for code in [four_qubit(), five_qubit()] {
            let m = code.num_generators();
            for word in 0..1u64 << m {
                let s = Syndrome::from_word(word, m);
                let t = build_wolf_trellis(&code, &s).unwrap();
                let paths: BTreeSet<PauliString> =
                    t.enumerate_paths().into_iter().collect();
                let expected: BTreeSet<PauliString> =
                    crate::oracle::enumerate_coset(&code, &s)
                        .unwrap()
                        .elements()
                        .iter()
                        .cloned()
                        .collect();
                assert_eq!(paths.len(), t.enumerate_paths().len(), "no duplicates");
                assert_eq!(paths, expected, "syndrome {s}");
            }
        }
    }

    #[test]
    fn state_spaces_bounded() {
        for code in [four_qubit(), five_qubit()] {
            let t = build_wolf_trellis(&code, &Syndrome::zero(code.num_generators())).unwrap();
            for i in 0..=code.n() {
                assert!(t.level(i).len() <= 1 << code.num_generators());
            }
        }
    }

    #[test]
    fn determinism_per_label() {
        let t = build_wolf_trellis(&five_qubit(), &"0011".parse().unwrap()).unwrap();
        for i in 1..=5 {
            let mut seen = BTreeSet::new();
            for e in t.section(i) {
                assert!(seen.insert((e.from, e.label)), "duplicate outgoing label");
            }
        }
    }

    #[test]
    fn span_examples() {
        assert_eq!(span(&ps("XZXII")).unwrap(), Span { start: 1, end: 3 });
        assert_eq!(span(&ps("IIXZX")).unwrap(), Span { start: 3, end: 5 });
        assert_eq!(span(&ps("IZII")).unwrap(), Span { start: 2, end: 2 });
        assert!(span(&ps("III")).is_err());
    }

    #[test]
    fn paper_codes_are_trellis_oriented() {
        assert!(is_trellis_oriented(&four_qubit()).unwrap());
        assert!(is_trellis_oriented(&five_qubit()).unwrap());
    }

    #[test]
    fn triple_start_collision_is_not_oriented() {
        // three generators all start at column 1
        let code = StabilizerCode::new(
            3,
            vec![ps("XXI"), ps("YZI"), ps("ZYX")],
        )
        .unwrap();
        code.validate().unwrap();
        assert!(!is_trellis_oriented(&code).unwrap());
    }

    fn same_group(a: &StabilizerCode, b: &StabilizerCode) -> bool {
        let mut rows: Vec<Vec<bool>> = a.generators().iter().map(|g| g.to_symplectic()).collect();
        rows.extend(b.generators().iter().map(|g| g.to_symplectic()));
        BitMatrix::from_rows(&rows).rank() == a.num_generators()
            && a.num_generators() == b.num_generators()
    }

    #[test]
    fn tof_fixes_triple_collision() {
        let code = StabilizerCode::new(
            3,
            vec![ps("XXI"), ps("YZI"), ps("ZYX")],
        )
        .unwrap();
        code.validate().unwrap();
        let tof = trellis_oriented_form(&code).unwrap();
        assert!(is_trellis_oriented(&tof).unwrap());
        assert!(same_group(&code, &tof));
        tof.validate().unwrap();
    }

    #[test]
    fn tof_is_stable_on_oriented_input() {
        let code = five_qubit();
        let tof = trellis_oriented_form(&code).unwrap();
        assert!(is_trellis_oriented(&tof).unwrap());
        assert!(same_group(&code, &tof));
    }

    #[test]
    fn tof_random_codes() {
        let mut trials = 0;
        let mut seed = 0;
        while trials < 1000 {
            seed += 1;
            let n = 2 + (seed as usize % 7); // 2..=8
            let max_m = n.min(4);
            let m = 1 + (seed as usize / 7) % max_m;
            let Some(code) = random_code(n, n - m, seed) else {
                continue;
            };
            trials += 1;
            let tof = trellis_oriented_form(&code).unwrap();
            assert!(is_trellis_oriented(&tof).unwrap(), "seed {seed}");
            assert!(same_group(&code, &tof), "seed {seed}");
            tof.validate().unwrap();
        }
    }

    #[test]
    fn past_future_boundaries() {
        let code = four_qubit();
        let (n, k) = (code.n(), code.k());
        let pst0 = past_subgroup(&code, 0).unwrap();
        assert_eq!(pst0.len(), 1);
        assert!(pst0[0].is_identity());
        assert_eq!(future_subgroup(&code, 0).unwrap().len(), 1 << (n + k));
        assert_eq!(past_subgroup(&code, n).unwrap().len(), 1 << (n + k));
        assert_eq!(future_subgroup(&code, n).unwrap().len(), 1);
    }

    #[test]
    fn lemma_bound_and_theorem_equality_paper_codes() {
        for code in [four_qubit(), five_qubit()] {
            let (n, k) = (code.n(), code.k());
            let t = build_wolf_trellis(&code, &Syndrome::zero(code.num_generators())).unwrap();
            let xi = t.state_profile().unwrap().xi().to_vec();
            for i in 0..=n {
                let p = past_subgroup(&code, i).unwrap().len().ilog2();
                let f = future_subgroup(&code, i).unwrap().len().ilog2();
                let bound = (n + k) as i64 - p as i64 - f as i64;
                assert!(xi[i] as i64 >= bound);
                // both paper sets are already trellis oriented
                assert_eq!(xi[i] as i64, bound);
            }
        }
    }

    #[test]
    fn dot_export_shape() {
        let t = build_wolf_trellis(&single_x(), &Syndrome::zero(1)).unwrap();
        let dot = t.export_dot();
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.contains("label=\"I\""));
        assert!(dot.contains("label=\"X\""));

        let t = build_wolf_trellis(&four_qubit(), &Syndrome::zero(2)).unwrap();
        let dot = t.export_dot();
        // 14 nodes in ranks 1,4,4,4,1
        let nodes: BTreeSet<&str> = dot
            .split(|c: char| !(c.is_alphanumeric() || c == '_' || c == 'v'))
            .filter(|w| w.starts_with('v') && w.contains('_'))
            .collect();
        assert_eq!(nodes.len(), 14);
        // structural sanity of the DOT text
        assert!(dot.starts_with("digraph trellis {"));
        assert_eq!(dot.matches('{').count(), dot.matches('}').count());
        assert!(dot.trim_end().ends_with('}'));
    }

    #[test]
    fn profile_shape_matches_zero_syndrome_for_all_syndromes() {
        // regression, not a theorem: for the paper codes every syndrome
        // yields the same profile as the zero syndrome
        for code in [four_qubit(), five_qubit()] {
            let m = code.num_generators();
            let tof = trellis_oriented_form(&code).unwrap();
            let base = build_wolf_trellis(&tof, &Syndrome::zero(m))
                .unwrap()
                .state_profile()
                .unwrap();
            for word in 0..1u64 << m {
                let s = Syndrome::from_word(word, m);
                let p = build_wolf_trellis(&tof, &s).unwrap().state_profile().unwrap();
                assert_eq!(p, base, "syndrome {s}");
            }
        }
    }
}
