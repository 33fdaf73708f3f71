use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{DiscreteTrace, IntervalSet, TimeKind};
use crate::error::{Error, Result};

/// A named family of propositions sharing one time axis.
#[derive(Debug, Clone, PartialEq)]
pub enum SignalBundle {
    Discrete {
        t_end: usize,
        props: BTreeMap<String, DiscreteTrace>,
    },
    Continuous {
        domain_end: f64,
        props: BTreeMap<String, IntervalSet>,
    },
}

impl SignalBundle {
    pub fn new_discrete(traces: Vec<DiscreteTrace>) -> Result<Self> {
        let t_end = traces
            .first()
            .ok_or_else(|| Error::Domain("bundle needs at least one proposition".into()))?
            .t_end();
        let mut props = BTreeMap::new();
        for tr in traces {
            if tr.t_end() != t_end {
                return Err(Error::DomainMismatch(format!(
                    "trace {} has t_end {} but bundle has {}",
                    tr.name(),
                    tr.t_end(),
                    t_end
                )));
            }
            props.insert(tr.name().to_owned(), tr);
        }
        Ok(Self::Discrete { t_end, props })
    }

    pub fn new_continuous(sets: Vec<(String, IntervalSet)>) -> Result<Self> {
        let domain_end = sets
            .first()
            .ok_or_else(|| Error::Domain("bundle needs at least one proposition".into()))?
            .1
            .domain_end();
        let mut props = BTreeMap::new();
        for (name, set) in sets {
            if set.domain_end() != domain_end {
                return Err(Error::DomainMismatch(format!(
                    "proposition {name} has domain end {} but bundle has {domain_end}",
                    set.domain_end()
                )));
            }
            props.insert(name, set);
        }
        Ok(Self::Continuous { domain_end, props })
    }

    pub fn time_kind(&self) -> TimeKind {
        match self {
            Self::Discrete { .. } => TimeKind::Discrete,
            Self::Continuous { .. } => TimeKind::Continuous,
        }
    }

    /// The bound of the time domain: `T` for `{0..T}`, or the end of `[0, T)`.
    pub fn domain_end(&self) -> f64 {
        match self {
            Self::Discrete { t_end, .. } => *t_end as f64,
            Self::Continuous { domain_end, .. } => *domain_end,
        }
    }

    pub fn prop_names(&self) -> Vec<&str> {
        match self {
            Self::Discrete { props, .. } => props.keys().map(String::as_str).collect(),
            Self::Continuous { props, .. } => props.keys().map(String::as_str).collect(),
        }
    }

    pub fn discrete_prop(&self, name: &str) -> Result<&DiscreteTrace> {
        match self {
            Self::Discrete { props, .. } => props
                .get(name)
                .ok_or_else(|| Error::UnknownProposition(name.to_owned())),
            Self::Continuous { .. } => Err(Error::DomainMismatch(
                "expected a discrete-time bundle".into(),
            )),
        }
    }

    pub fn continuous_prop(&self, name: &str) -> Result<&IntervalSet> {
        match self {
            Self::Continuous { props, .. } => props
                .get(name)
                .ok_or_else(|| Error::UnknownProposition(name.to_owned())),
            Self::Discrete { .. } => Err(Error::DomainMismatch(
                "expected a continuous-time bundle".into(),
            )),
        }
    }
}

/// On-disk encodings for signal bundles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BundleFormat {
    Json,
    Csv,
}

#[derive(Serialize, Deserialize)]
struct RawBundle {
    time: String,
    #[serde(rename = "T")]
    t: serde_json::Number,
    props: BTreeMap<String, serde_json::Value>,
}

pub fn load_bundle(path: impl AsRef<Path>, format: BundleFormat) -> Result<SignalBundle> {
    let file = std::fs::File::open(path)?;
    read_bundle(file, format)
}

pub fn read_bundle(mut reader: impl Read, format: BundleFormat) -> Result<SignalBundle> {
    match format {
        BundleFormat::Json => {
            let raw: RawBundle = serde_json::from_reader(reader)?;
            bundle_from_raw(raw)
        }
        BundleFormat::Csv => {
            let mut text = String::new();
            reader.read_to_string(&mut text)?;
            bundle_from_csv(&text)
        }
    }
}

pub fn save_bundle(
    bundle: &SignalBundle,
    path: impl AsRef<Path>,
    format: BundleFormat,
) -> Result<()> {
    let mut file = std::fs::File::create(path)?;
    write_bundle(bundle, &mut file, format)
}

pub fn write_bundle(
    bundle: &SignalBundle,
    writer: &mut impl Write,
    format: BundleFormat,
) -> Result<()> {
    match format {
        BundleFormat::Json => {
            let raw = raw_from_bundle(bundle);
            serde_json::to_writer(&mut *writer, &raw)?;
            writer.write_all(b"\n")?;
            Ok(())
        }
        BundleFormat::Csv => write_bundle_csv(bundle, writer),
    }
}

fn bundle_from_raw(raw: RawBundle) -> Result<SignalBundle> {
    match raw.time.as_str() {
        "discrete" => {
            let t_end = raw
                .t
                .as_u64()
                .ok_or_else(|| Error::Domain(format!("discrete T must be a natural, got {}", raw.t)))?
                as usize;
            let mut traces = Vec::new();
            for (name, value) in raw.props {
                let arr = value.as_array().ok_or_else(|| {
                    Error::Domain(format!("proposition {name} must be an array"))
                })?;
                if arr.len() != t_end + 1 {
                    return Err(Error::Domain(format!(
                        "proposition {name} has {} values, expected T+1 = {}",
                        arr.len(),
                        t_end + 1
                    )));
                }
                let mut values = Vec::with_capacity(arr.len());
                for v in arr {
                    match v.as_u64() {
                        Some(0) => values.push(false),
                        Some(1) => values.push(true),
                        _ => {
                            return Err(Error::Domain(format!(
                                "proposition {name} has non-Boolean value {v}"
                            )))
                        }
                    }
                }
                traces.push(DiscreteTrace::new(name, values)?);
            }
            SignalBundle::new_discrete(traces)
        }
        "continuous" => {
            let domain_end = raw
                .t
                .as_f64()
                .ok_or_else(|| Error::Domain(format!("continuous T must be a number, got {}", raw.t)))?;
            let mut sets = Vec::new();
            for (name, value) in raw.props {
                let arr = value.as_array().ok_or_else(|| {
                    Error::Domain(format!("proposition {name} must be an array"))
                })?;
                let mut intervals = Vec::with_capacity(arr.len());
                for pair in arr {
                    let pair = pair.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                        Error::Domain(format!("proposition {name}: expected [lo, hi] pairs"))
                    })?;
                    let lo = pair[0].as_f64().ok_or_else(|| {
                        Error::Domain(format!("proposition {name}: non-numeric endpoint"))
                    })?;
                    let hi = pair[1].as_f64().ok_or_else(|| {
                        Error::Domain(format!("proposition {name}: non-numeric endpoint"))
                    })?;
                    intervals.push((lo, hi));
                }
                sets.push((name, IntervalSet::new(intervals, domain_end)?));
            }
            SignalBundle::new_continuous(sets)
        }
        other => Err(Error::Domain(format!(
            "time must be \"discrete\" or \"continuous\", got \"{other}\""
        ))),
    }
}

fn raw_from_bundle(bundle: &SignalBundle) -> RawBundle {
    match bundle {
        SignalBundle::Discrete { t_end, props } => RawBundle {
            time: "discrete".into(),
            t: (*t_end as u64).into(),
            props: props
                .iter()
                .map(|(name, tr)| {
                    let vals: Vec<serde_json::Value> = tr
                        .values()
                        .iter()
                        .map(|&b| serde_json::Value::from(b as u64))
                        .collect();
                    (name.clone(), serde_json::Value::from(vals))
                })
                .collect(),
        },
        SignalBundle::Continuous { domain_end, props } => RawBundle {
            time: "continuous".into(),
            t: serde_json::Number::from_f64(*domain_end).expect("finite domain end"),
            props: props
                .iter()
                .map(|(name, set)| {
                    let pairs: Vec<serde_json::Value> = set
                        .intervals()
                        .iter()
                        .map(|&(lo, hi)| serde_json::json!([lo, hi]))
                        .collect();
                    (name.clone(), serde_json::Value::from(pairs))
                })
                .collect(),
        },
    }
}

/// CSV encoding for discrete bundles: header `t,p1,p2,...`, one row per
/// integer time.
fn bundle_from_csv(text: &str) -> Result<SignalBundle> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers()?.clone();
    if headers.is_empty() || &headers[0] != "t" {
        return Err(Error::Domain("csv header must start with column t".into()));
    }
    let names: Vec<String> = headers.iter().skip(1).map(str::to_owned).collect();
    if names.is_empty() {
        return Err(Error::Domain("csv has no proposition columns".into()));
    }
    let mut columns: Vec<Vec<bool>> = vec![Vec::new(); names.len()];
    for (row_index, record) in reader.records().enumerate() {
        let record = record?;
        if record.len() != names.len() + 1 {
            return Err(Error::Domain(format!("csv row {row_index} has wrong arity")));
        }
        let t: usize = record[0]
            .parse()
            .map_err(|_| Error::Domain(format!("csv row {row_index}: bad time {}", &record[0])))?;
        if t != row_index {
            return Err(Error::Domain(format!(
                "csv rows must cover 0..=T in order; row {row_index} has t={t}"
            )));
        }
        for (col, field) in record.iter().skip(1).enumerate() {
            match field.trim() {
                "0" => columns[col].push(false),
                "1" => columns[col].push(true),
                other => {
                    return Err(Error::Domain(format!(
                        "csv row {row_index} has non-Boolean value {other}"
                    )))
                }
            }
        }
    }
    let traces = names
        .into_iter()
        .zip(columns)
        .map(|(name, values)| DiscreteTrace::new(name, values))
        .collect::<Result<Vec<_>>>()?;
    SignalBundle::new_discrete(traces)
}

fn write_bundle_csv(bundle: &SignalBundle, writer: &mut impl Write) -> Result<()> {
    let SignalBundle::Discrete { t_end, props } = bundle else {
        return Err(Error::DomainMismatch(
            "csv encoding covers discrete bundles only".into(),
        ));
    };
    let mut w = csv::Writer::from_writer(writer);
    let mut header = vec!["t".to_owned()];
    header.extend(props.keys().cloned());
    w.write_record(&header)?;
    for t in 0..=*t_end {
        let mut row = vec![t.to_string()];
        for tr in props.values() {
            row.push((tr.values()[t] as u8).to_string());
        }
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_discrete_json() {
        let text = r#"{"time":"discrete","T":4,"props":{"p":[0,1,1,0,0]}}"#;
        let bundle = read_bundle(text.as_bytes(), BundleFormat::Json).unwrap();
        let p = bundle.discrete_prop("p").unwrap();
        assert_eq!(p.values(), &[false, true, true, false, false]);
        assert_eq!(p.t_end(), 4);
    }

    #[test]
    fn loads_continuous_json() {
        let text = r#"{"time":"continuous","T":12,"props":{"p":[[2,6]]}}"#;
        let bundle = read_bundle(text.as_bytes(), BundleFormat::Json).unwrap();
        let p = bundle.continuous_prop("p").unwrap();
        assert_eq!(p.intervals(), &[(2.0, 6.0)]);
        assert_eq!(p.domain_end(), 12.0);
    }

    #[test]
    fn rejects_inverted_interval() {
        let text = r#"{"time":"continuous","T":12,"props":{"p":[[5,3]]}}"#;
        let err = read_bundle(text.as_bytes(), BundleFormat::Json).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn rejects_non_boolean_discrete() {
        let text = r#"{"time":"discrete","T":1,"props":{"p":[0,2]}}"#;
        assert!(matches!(
            read_bundle(text.as_bytes(), BundleFormat::Json),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn json_round_trip_is_canonical() {
        for text in [
            r#"{"time":"discrete","T":4,"props":{"p":[0,1,1,0,0],"q":[1,0,0,0,1]}}"#,
            r#"{"time":"continuous","T":12,"props":{"p":[[2,6]],"q":[[0,1],[3.5,7.25]]}}"#,
        ] {
            let bundle = read_bundle(text.as_bytes(), BundleFormat::Json).unwrap();
            let mut first = Vec::new();
            write_bundle(&bundle, &mut first, BundleFormat::Json).unwrap();
            let reloaded = read_bundle(first.as_slice(), BundleFormat::Json).unwrap();
            assert_eq!(reloaded, bundle);
            let mut second = Vec::new();
            write_bundle(&reloaded, &mut second, BundleFormat::Json).unwrap();
            assert_eq!(first, second);
        }
    }

    #[test]
    fn csv_round_trip() {
        let text = "t,p,q\n0,0,1\n1,1,0\n2,1,0\n";
        let bundle = read_bundle(text.as_bytes(), BundleFormat::Csv).unwrap();
        assert_eq!(
            bundle.discrete_prop("p").unwrap().values(),
            &[false, true, true]
        );
        let mut out = Vec::new();
        write_bundle(&bundle, &mut out, BundleFormat::Csv).unwrap();
        let again = read_bundle(out.as_slice(), BundleFormat::Csv).unwrap();
        assert_eq!(again, bundle);
    }
}
