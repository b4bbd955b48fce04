//! Pass/fail records produced by the verification suites.

use alloc::string::String;
use alloc::vec::Vec;

use crate::freealg::MembershipCertificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// No certificate was found within the degree bound. This is not a
    /// disproof: membership search is positive-certificate only.
    Unresolved,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unresolved => "unresolved-at-bound",
        }
    }
}

impl From<bool> for Status {
    fn from(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub status: Status,
    pub detail: String,
    /// Degree bound used, for ideal-membership items.
    pub bound: Option<usize>,
    pub certificate: Option<MembershipCertificate>,
}

impl CheckItem {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        CheckItem { name: name.into(), status, detail: detail.into(), bound: None, certificate: None }
    }

    pub fn check(name: impl Into<String>, ok: bool) -> Self {
        Self::new(name, ok.into(), String::new())
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), items: Vec::new() }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.items.push(CheckItem::check(name, ok));
    }

    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> + '_ {
        self.items.iter().filter(|i| !i.passed())
    }

    pub fn get(&self, name: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.name == name)
    }
}
