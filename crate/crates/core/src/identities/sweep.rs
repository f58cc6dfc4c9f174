use std::ops::RangeInclusive;

use rayon::prelude::*;

use super::catalog::check_any;
use super::{CaseParams, CheckOutcome, IdentityError, IdentityId, Status};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub identity: IdentityId,
    /// Ordered by `(m, k)`.
    pub cases: Vec<(CaseParams, CheckOutcome)>,
    pub counts: Counts,
}

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.counts.fail == 0
    }

    pub fn with_status(&self, status: Status) -> impl Iterator<Item = &CaseParams> {
        self.cases
            .iter()
            .filter(move |(_, o)| o.status == status)
            .map(|(p, _)| p)
    }
}

fn grid(
    id: IdentityId,
    m_range: RangeInclusive<u32>,
    k_range: Option<RangeInclusive<i64>>,
) -> Result<Vec<CaseParams>, IdentityError> {
    // LEM_BRIDGE is only stated at multiples of 5
    let ms = m_range.filter(|m| id != IdentityId::LemBridge || m.is_multiple_of(5));
    match (id.takes_k(), k_range) {
        (true, Some(ks)) => Ok(ms
            .flat_map(|m| ks.clone().map(move |k| CaseParams::mk(m, k)))
            .collect()),
        (false, None) => Ok(ms.map(CaseParams::m).collect()),
        (true, None) => Err(IdentityError::MissingParam { id, param: "k" }),
        (false, Some(_)) => Err(IdentityError::ExtraParam { id, param: "k" }),
    }
}

/// Checks every case of the grid on the calling thread.
pub fn sweep(
    id: IdentityId,
    m_range: RangeInclusive<u32>,
    k_range: Option<RangeInclusive<i64>>,
) -> Result<SweepReport, IdentityError> {
    sweep_jobs(id, m_range, k_range, 1)
}

/// Like [`sweep`], spreading cases over `jobs` worker threads. The report is
/// identical for every `jobs`.
pub fn sweep_jobs(
    id: IdentityId,
    m_range: RangeInclusive<u32>,
    k_range: Option<RangeInclusive<i64>>,
    jobs: usize,
) -> Result<SweepReport, IdentityError> {
    let params = grid(id, m_range, k_range)?;
    let outcomes: Vec<CheckOutcome> = if jobs <= 1 {
        params
            .iter()
            .map(|p| check_any(id, p))
            .collect::<Result<_, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            params
                .par_iter()
                .map(|p| check_any(id, p))
                .collect::<Result<_, _>>()
        })?
    };
    let mut counts = Counts::default();
    for o in &outcomes {
        match o.status {
            Status::Pass => counts.pass += 1,
            Status::Fail => counts.fail += 1,
            Status::Skipped => counts.skip += 1,
        }
    }
    Ok(SweepReport {
        identity: id,
        cases: params.into_iter().zip(outcomes).collect(),
        counts,
    })
}
