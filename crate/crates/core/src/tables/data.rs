// Reference generator lists for the nef cone, Γ(L1) and Γ(h), with their
// annotation columns. Row n of each table is entry n - 1.

use super::{Reason, Term};
use crate::picard::ClassName;

pub(super) const NEF_CONE: [[i64; 7]; 99] = [
    [ 2, -1, -1, -1,  0,  0,  0], // 1
    [ 2, -1, -1,  0, -1,  0,  0], // 2
    [ 2, -1, -1,  0,  0, -1,  0], // 3
    [ 2, -1, -1,  0,  0,  0, -1], // 4
    [ 2, -1,  0, -1, -1,  0,  0], // 5
    [ 2, -1,  0, -1,  0, -1,  0], // 6
    [ 2, -1,  0, -1,  0,  0, -1], // 7
    [ 2, -1,  0,  0, -1, -1,  0], // 8
    [ 2, -1,  0,  0, -1,  0, -1], // 9
    [ 2, -1,  0,  0,  0, -1, -1], // 10
    [ 1,  0,  0,  0,  0,  0,  0], // 11
    [ 3, -2, -1, -1, -1, -1,  0], // 12
    [ 3, -2, -1, -1, -1,  0, -1], // 13
    [ 3, -2, -1, -1,  0, -1, -1], // 14
    [ 3, -2, -1,  0, -1, -1, -1], // 15
    [ 3, -2,  0, -1, -1, -1, -1], // 16
    [ 1, -1,  0,  0,  0,  0,  0], // 17
    [ 1,  0, -1,  0,  0,  0,  0], // 18
    [ 1,  0,  0, -1,  0,  0,  0], // 19
    [ 1,  0,  0,  0, -1,  0,  0], // 20
    [ 1,  0,  0,  0,  0, -1,  0], // 21
    [ 1,  0,  0,  0,  0,  0, -1], // 22
    [ 2,  0, -1, -1, -1,  0,  0], // 23
    [ 2,  0, -1, -1,  0, -1,  0], // 24
    [ 2,  0, -1, -1,  0,  0, -1], // 25
    [ 2,  0, -1,  0, -1, -1,  0], // 26
    [ 2,  0, -1,  0, -1,  0, -1], // 27
    [ 2,  0, -1,  0,  0, -1, -1], // 28
    [ 2,  0,  0, -1, -1, -1,  0], // 29
    [ 2,  0,  0, -1, -1,  0, -1], // 30
    [ 2,  0,  0, -1,  0, -1, -1], // 31
    [ 2,  0,  0,  0, -1, -1, -1], // 32
    [ 2, -1, -1, -1, -1,  0,  0], // 33
    [ 2, -1, -1, -1,  0, -1,  0], // 34
    [ 2, -1, -1, -1,  0,  0, -1], // 35
    [ 2, -1, -1,  0, -1, -1,  0], // 36
    [ 2, -1, -1,  0, -1,  0, -1], // 37
    [ 2, -1, -1,  0,  0, -1, -1], // 38
    [ 2, -1,  0, -1, -1, -1,  0], // 39
    [ 2, -1,  0, -1, -1,  0, -1], // 40
    [ 2, -1,  0, -1,  0, -1, -1], // 41
    [ 2, -1,  0,  0, -1, -1, -1], // 42
    [ 2,  0, -1, -1, -1, -1,  0], // 43
    [ 2,  0, -1, -1, -1,  0, -1], // 44
    [ 2,  0, -1, -1,  0, -1, -1], // 45
    [ 2,  0, -1,  0, -1, -1, -1], // 46
    [ 2,  0,  0, -1, -1, -1, -1], // 47
    [ 3, -1, -2, -1, -1, -1,  0], // 48
    [ 3, -1, -2, -1, -1,  0, -1], // 49
    [ 3, -1, -2, -1,  0, -1, -1], // 50
    [ 3, -1, -2,  0, -1, -1, -1], // 51
    [ 3, -1, -1, -2, -1, -1,  0], // 52
    [ 3, -1, -1, -2, -1,  0, -1], // 53
    [ 3, -1, -1, -2,  0, -1, -1], // 54
    [ 3, -1, -1, -1, -2, -1,  0], // 55
    [ 3, -1, -1, -1, -2,  0, -1], // 56
    [ 3, -1, -1, -1, -1, -2,  0], // 57
    [ 3, -1, -1, -1, -1,  0, -2], // 58
    [ 3, -1, -1, -1,  0, -2, -1], // 59
    [ 3, -1, -1, -1,  0, -1, -2], // 60
    [ 3, -1, -1,  0, -2, -1, -1], // 61
    [ 3, -1, -1,  0, -1, -2, -1], // 62
    [ 3, -1, -1,  0, -1, -1, -2], // 63
    [ 3, -1,  0, -2, -1, -1, -1], // 64
    [ 3, -1,  0, -1, -2, -1, -1], // 65
    [ 3, -1,  0, -1, -1, -2, -1], // 66
    [ 3, -1,  0, -1, -1, -1, -2], // 67
    [ 3,  0, -2, -1, -1, -1, -1], // 68
    [ 3,  0, -1, -2, -1, -1, -1], // 69
    [ 3,  0, -1, -1, -2, -1, -1], // 70
    [ 3,  0, -1, -1, -1, -2, -1], // 71
    [ 3,  0, -1, -1, -1, -1, -2], // 72
    [ 3, -2, -1, -1, -1, -1, -1], // 73
    [ 3, -1, -2, -1, -1, -1, -1], // 74
    [ 3, -1, -1, -2, -1, -1, -1], // 75
    [ 3, -1, -1, -1, -2, -1, -1], // 76
    [ 3, -1, -1, -1, -1, -2, -1], // 77
    [ 3, -1, -1, -1, -1, -1, -2], // 78
    [ 4, -2, -2, -2, -1, -1, -1], // 79
    [ 4, -2, -2, -1, -2, -1, -1], // 80
    [ 4, -2, -2, -1, -1, -2, -1], // 81
    [ 4, -2, -2, -1, -1, -1, -2], // 82
    [ 4, -2, -1, -2, -2, -1, -1], // 83
    [ 4, -2, -1, -2, -1, -2, -1], // 84
    [ 4, -2, -1, -2, -1, -1, -2], // 85
    [ 4, -2, -1, -1, -2, -2, -1], // 86
    [ 4, -2, -1, -1, -2, -1, -2], // 87
    [ 4, -2, -1, -1, -1, -2, -2], // 88
    [ 4, -1, -2, -2, -2, -1, -1], // 89
    [ 4, -1, -2, -2, -1, -2, -1], // 90
    [ 4, -1, -2, -2, -1, -1, -2], // 91
    [ 4, -1, -2, -1, -2, -2, -1], // 92
    [ 4, -1, -2, -1, -2, -1, -2], // 93
    [ 4, -1, -2, -1, -1, -2, -2], // 94
    [ 4, -1, -1, -2, -2, -2, -1], // 95
    [ 4, -1, -1, -2, -2, -1, -2], // 96
    [ 4, -1, -1, -2, -1, -2, -2], // 97
    [ 4, -1, -1, -1, -2, -2, -2], // 98
    [ 5, -2, -2, -2, -2, -2, -2], // 99
];

pub(super) const PENCIL_L1_CONE: [([i64; 7], Reason); 99] = [
    ([ 4, -3, -1, -1, -1, -1, -1], Reason::Degree(1)), // 1
    ([ 2, -1, -1,  0,  0,  0,  0], Reason::Degree(1)), // 2
    ([ 2, -1,  0, -1,  0,  0,  0], Reason::Degree(1)), // 3
    ([ 2, -1,  0,  0, -1,  0,  0], Reason::Degree(1)), // 4
    ([ 2, -1,  0,  0,  0, -1,  0], Reason::Degree(1)), // 5
    ([ 2, -1,  0,  0,  0,  0, -1], Reason::Degree(1)), // 6
    ([ 1,  0,  0,  0,  0,  0,  0], Reason::Degree(1)), // 7
    ([ 3, -2, -1, -1, -1,  0,  0], Reason::Degree(1)), // 8
    ([ 3, -2, -1, -1,  0, -1,  0], Reason::Degree(1)), // 9
    ([ 3, -2, -1, -1,  0,  0, -1], Reason::Degree(1)), // 10
    ([ 3, -2, -1,  0, -1, -1,  0], Reason::Degree(1)), // 11
    ([ 3, -2, -1,  0, -1,  0, -1], Reason::Degree(1)), // 12
    ([ 3, -2, -1,  0,  0, -1, -1], Reason::Degree(1)), // 13
    ([ 3, -2,  0, -1, -1, -1,  0], Reason::Degree(1)), // 14
    ([ 3, -2,  0, -1, -1,  0, -1], Reason::Degree(1)), // 15
    ([ 3, -2,  0, -1,  0, -1, -1], Reason::Degree(1)), // 16
    ([ 3, -2,  0,  0, -1, -1, -1], Reason::Degree(1)), // 17
    ([ 1, -1,  0,  0,  0,  0,  0], Reason::Degree(0)), // 18
    ([ 2, -1, -1, -1,  0,  0,  0], Reason::Degree(1)), // 19
    ([ 2, -1, -1,  0, -1,  0,  0], Reason::Degree(1)), // 20
    ([ 2, -1, -1,  0,  0, -1,  0], Reason::Degree(1)), // 21
    ([ 2, -1, -1,  0,  0,  0, -1], Reason::Degree(1)), // 22
    ([ 2, -1,  0, -1, -1,  0,  0], Reason::Degree(1)), // 23
    ([ 2, -1,  0, -1,  0, -1,  0], Reason::Degree(1)), // 24
    ([ 2, -1,  0, -1,  0,  0, -1], Reason::Degree(1)), // 25
    ([ 2, -1,  0,  0, -1, -1,  0], Reason::Degree(1)), // 26
    ([ 2, -1,  0,  0, -1,  0, -1], Reason::Degree(1)), // 27
    ([ 2, -1,  0,  0,  0, -1, -1], Reason::Degree(1)), // 28
    ([ 3, -1, -1, -1, -1,  0,  0], Reason::Sum(&[Term::Named(ClassName::L), Term::Named(ClassName::Lij(5, 6))])), // 29
    ([ 3, -1, -1, -1,  0, -1,  0], Reason::Sum(&[Term::Named(ClassName::L), Term::Named(ClassName::Lij(4, 6))])), // 30
    ([ 3, -1, -1, -1,  0,  0, -1], Reason::Sum(&[Term::Named(ClassName::L), Term::Named(ClassName::Lij(4, 5))])), // 31
    ([ 3, -1, -1,  0, -1, -1,  0], Reason::Sum(&[Term::Named(ClassName::L), Term::Named(ClassName::Lij(3, 6))])), // 32
    ([ 3, -1, -1,  0, -1,  0, -1], Reason::Sum(&[Term::Named(ClassName::L), Term::Named(ClassName::Lij(3, 5))])), // 33
    ([ 3, -1, -1,  0,  0, -1, -1], Reason::Sum(&[Term::Named(ClassName::L), Term::Named(ClassName::Lij(3, 4))])), // 34
    ([ 3, -1,  0, -1, -1, -1,  0], Reason::Sum(&[Term::Named(ClassName::L), Term::Named(ClassName::Lij(2, 6))])), // 35
    ([ 3, -1,  0, -1, -1,  0, -1], Reason::Sum(&[Term::Named(ClassName::L), Term::Named(ClassName::Lij(2, 5))])), // 36
    ([ 3, -1,  0, -1,  0, -1, -1], Reason::Sum(&[Term::Named(ClassName::L), Term::Named(ClassName::Lij(2, 4))])), // 37
    ([ 3, -1,  0,  0, -1, -1, -1], Reason::Sum(&[Term::Named(ClassName::L), Term::Named(ClassName::Lij(2, 3))])), // 38
    ([ 3, -1, -1, -1, -1, -1,  0], Reason::Sum(&[Term::Named(ClassName::Li(2)), Term::Named(ClassName::Lij(2, 6))])), // 39
    ([ 3, -1, -1, -1, -1,  0, -1], Reason::Sum(&[Term::Named(ClassName::Li(2)), Term::Named(ClassName::Lij(2, 5))])), // 40
    ([ 3, -1, -1, -1,  0, -1, -1], Reason::Sum(&[Term::Named(ClassName::Li(2)), Term::Named(ClassName::Lij(2, 4))])), // 41
    ([ 3, -1, -1,  0, -1, -1, -1], Reason::Sum(&[Term::Named(ClassName::Li(2)), Term::Named(ClassName::Lij(2, 3))])), // 42
    ([ 3, -1,  0, -1, -1, -1, -1], Reason::Sum(&[Term::Named(ClassName::Li(3)), Term::Named(ClassName::Lij(2, 3))])), // 43
    ([ 4, -1, -1, -1, -1, -1, -1], Reason::Sum(&[Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Li(2)), Term::Named(ClassName::Li(3))])), // 44
    ([ 3, -2, -1, -1, -1, -1,  0], Reason::Degree(1)), // 45
    ([ 3, -2, -1, -1, -1,  0, -1], Reason::Degree(1)), // 46
    ([ 3, -2, -1, -1,  0, -1, -1], Reason::Degree(1)), // 47
    ([ 3, -2, -1,  0, -1, -1, -1], Reason::Degree(1)), // 48
    ([ 3, -2,  0, -1, -1, -1, -1], Reason::Degree(1)), // 49
    ([ 4, -2, -2, -1, -1, -1,  0], Reason::Sum(&[Term::Row(45), Term::Named(ClassName::Li(2))])), // 50
    ([ 4, -2, -2, -1, -1,  0, -1], Reason::Sum(&[Term::Row(46), Term::Named(ClassName::Li(2))])), // 51
    ([ 4, -2, -2, -1,  0, -1, -1], Reason::Sum(&[Term::Row(47), Term::Named(ClassName::Li(2))])), // 52
    ([ 4, -2, -2,  0, -1, -1, -1], Reason::Sum(&[Term::Row(48), Term::Named(ClassName::Li(2))])), // 53
    ([ 4, -2, -1, -2, -1, -1,  0], Reason::Sum(&[Term::Row(45), Term::Named(ClassName::Li(3))])), // 54
    ([ 4, -2, -1, -2, -1,  0, -1], Reason::Sum(&[Term::Row(46), Term::Named(ClassName::Li(3))])), // 55
    ([ 4, -2, -1, -2,  0, -1, -1], Reason::Sum(&[Term::Row(47), Term::Named(ClassName::Li(3))])), // 56
    ([ 4, -2, -1, -1, -2, -1,  0], Reason::Sum(&[Term::Row(45), Term::Named(ClassName::Li(4))])), // 57
    ([ 4, -2, -1, -1, -2,  0, -1], Reason::Sum(&[Term::Row(46), Term::Named(ClassName::Li(4))])), // 58
    ([ 4, -2, -1, -1, -1, -2,  0], Reason::Sum(&[Term::Row(45), Term::Named(ClassName::Li(5))])), // 59
    ([ 4, -2, -1, -1, -1,  0, -2], Reason::Sum(&[Term::Row(46), Term::Named(ClassName::Li(6))])), // 60
    ([ 4, -2, -1, -1,  0, -2, -1], Reason::Sum(&[Term::Row(47), Term::Named(ClassName::Li(5))])), // 61
    ([ 4, -2, -1, -1,  0, -1, -2], Reason::Sum(&[Term::Row(47), Term::Named(ClassName::Li(6))])), // 62
    ([ 4, -2, -1,  0, -2, -1, -1], Reason::Sum(&[Term::Row(48), Term::Named(ClassName::Li(4))])), // 63
    ([ 4, -2, -1,  0, -1, -2, -1], Reason::Sum(&[Term::Row(48), Term::Named(ClassName::Li(5))])), // 64
    ([ 4, -2, -1,  0, -1, -1, -2], Reason::Sum(&[Term::Row(48), Term::Named(ClassName::Li(6))])), // 65
    ([ 4, -2,  0, -2, -1, -1, -1], Reason::Sum(&[Term::Row(49), Term::Named(ClassName::Li(3))])), // 66
    ([ 4, -2,  0, -1, -2, -1, -1], Reason::Sum(&[Term::Row(49), Term::Named(ClassName::Li(4))])), // 67
    ([ 4, -2,  0, -1, -1, -2, -1], Reason::Sum(&[Term::Row(49), Term::Named(ClassName::Li(5))])), // 68
    ([ 4, -2,  0, -1, -1, -1, -2], Reason::Sum(&[Term::Row(49), Term::Named(ClassName::Li(6))])), // 69
    ([ 4, -2, -2, -1, -1, -1, -1], Reason::Sum(&[Term::Named(ClassName::B(1)), Term::Named(ClassName::Li(2))])), // 70
    ([ 4, -2, -1, -2, -1, -1, -1], Reason::Sum(&[Term::Named(ClassName::B(1)), Term::Named(ClassName::Li(3))])), // 71
    ([ 4, -2, -1, -1, -2, -1, -1], Reason::Sum(&[Term::Named(ClassName::B(1)), Term::Named(ClassName::Li(4))])), // 72
    ([ 4, -2, -1, -1, -1, -2, -1], Reason::Sum(&[Term::Named(ClassName::B(1)), Term::Named(ClassName::Li(5))])), // 73
    ([ 4, -2, -1, -1, -1, -1, -2], Reason::Sum(&[Term::Named(ClassName::B(1)), Term::Named(ClassName::Li(6))])), // 74
    ([ 5, -2, -2, -2, -1, -1, -1], Reason::Sum(&[Term::Named(ClassName::Li(3)), Term::Named(ClassName::Lij(3, 4)), Term::Named(ClassName::Lij(5, 6))])), // 75
    ([ 5, -2, -2, -1, -2, -1, -1], Reason::Sum(&[Term::Named(ClassName::Li(2)), Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(5, 6))])), // 76
    ([ 5, -2, -2, -1, -1, -2, -1], Reason::Sum(&[Term::Named(ClassName::Li(2)), Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(4, 6))])), // 77
    ([ 5, -2, -2, -1, -1, -1, -2], Reason::Sum(&[Term::Named(ClassName::Li(2)), Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(4, 5))])), // 78
    ([ 5, -2, -1, -2, -2, -1, -1], Reason::Sum(&[Term::Named(ClassName::Li(3)), Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(5, 6))])), // 79
    ([ 5, -2, -1, -2, -1, -2, -1], Reason::Sum(&[Term::Named(ClassName::Li(3)), Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(4, 6))])), // 80
    ([ 5, -2, -1, -2, -1, -1, -2], Reason::Sum(&[Term::Named(ClassName::Li(3)), Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(4, 5))])), // 81
    ([ 5, -2, -1, -1, -2, -2, -1], Reason::Sum(&[Term::Named(ClassName::Li(4)), Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(4, 6))])), // 82
    ([ 5, -2, -1, -1, -2, -1, -2], Reason::Sum(&[Term::Named(ClassName::Li(4)), Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(4, 5))])), // 83
    ([ 5, -2, -1, -1, -1, -2, -2], Reason::Sum(&[Term::Named(ClassName::Li(5)), Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(4, 5))])), // 84
    ([ 5, -3, -2, -2, -1, -1, -1], Reason::Sum(&[Term::Row(45), Term::Named(ClassName::Lij(4, 5))])), // 85
    ([ 5, -3, -2, -1, -2, -1, -1], Reason::Sum(&[Term::Row(45), Term::Named(ClassName::Lij(3, 5))])), // 86
    ([ 5, -3, -2, -1, -1, -2, -1], Reason::Sum(&[Term::Row(45), Term::Named(ClassName::Lij(3, 4))])), // 87
    ([ 5, -3, -2, -1, -1, -1, -2], Reason::Sum(&[Term::Row(46), Term::Named(ClassName::Lij(3, 4))])), // 88
    ([ 5, -3, -1, -2, -2, -1, -1], Reason::Sum(&[Term::Row(45), Term::Named(ClassName::Lij(2, 5))])), // 89
    ([ 5, -3, -1, -2, -1, -2, -1], Reason::Sum(&[Term::Row(45), Term::Named(ClassName::Lij(2, 4))])), // 90
    ([ 5, -3, -1, -2, -1, -1, -2], Reason::Sum(&[Term::Row(46), Term::Named(ClassName::Lij(2, 4))])), // 91
    ([ 5, -3, -1, -1, -2, -2, -1], Reason::Sum(&[Term::Row(45), Term::Named(ClassName::Lij(2, 3))])), // 92
    ([ 5, -3, -1, -1, -2, -1, -2], Reason::Sum(&[Term::Row(46), Term::Named(ClassName::Lij(2, 3))])), // 93
    ([ 5, -3, -1, -1, -1, -2, -2], Reason::Sum(&[Term::Row(47), Term::Named(ClassName::Lij(2, 3))])), // 94
    ([ 6, -3, -2, -2, -2, -2, -1], Reason::Sum(&[Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(4, 6)), Term::Named(ClassName::Lij(5, 6))])), // 95
    ([ 6, -3, -2, -2, -2, -1, -2], Reason::Sum(&[Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(4, 5)), Term::Named(ClassName::Lij(5, 6))])), // 96
    ([ 6, -3, -2, -2, -1, -2, -2], Reason::Sum(&[Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(4, 5)), Term::Named(ClassName::Lij(4, 6))])), // 97
    ([ 6, -3, -2, -1, -2, -2, -2], Reason::Sum(&[Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(3, 4)), Term::Named(ClassName::Lij(5, 6))])), // 98
    ([ 6, -3, -1, -2, -2, -2, -2], Reason::Sum(&[Term::Named(ClassName::Lij(2, 3)), Term::Named(ClassName::Lij(2, 4)), Term::Named(ClassName::Lij(5, 6))])), // 99
];

pub(super) const HYPERPLANE_CONE: [([i64; 7], ClassName); 99] = [
    ([ 8, -3, -3, -3, -3, -3, -3], ClassName::B(1)), // 1
    ([ 4, -1, -1, -1, -1, -1, -1], ClassName::Li(1)), // 2
    ([ 4, -2, -2, -1, -1, -1, -1], ClassName::Li(1)), // 3
    ([ 4, -2, -1, -2, -1, -1, -1], ClassName::Li(1)), // 4
    ([ 4, -2, -1, -1, -2, -1, -1], ClassName::Li(1)), // 5
    ([ 4, -2, -1, -1, -1, -2, -1], ClassName::Li(1)), // 6
    ([ 4, -2, -1, -1, -1, -1, -2], ClassName::Li(1)), // 7
    ([ 4, -1, -2, -2, -1, -1, -1], ClassName::Li(2)), // 8
    ([ 4, -1, -2, -1, -2, -1, -1], ClassName::Li(2)), // 9
    ([ 4, -1, -2, -1, -1, -2, -1], ClassName::Li(2)), // 10
    ([ 4, -1, -2, -1, -1, -1, -2], ClassName::Li(2)), // 11
    ([ 4, -1, -1, -2, -2, -1, -1], ClassName::Li(3)), // 12
    ([ 4, -1, -1, -2, -1, -2, -1], ClassName::Li(3)), // 13
    ([ 4, -1, -1, -2, -1, -1, -2], ClassName::Li(3)), // 14
    ([ 4, -1, -1, -1, -2, -2, -1], ClassName::Li(4)), // 15
    ([ 4, -1, -1, -1, -2, -1, -2], ClassName::Li(4)), // 16
    ([ 4, -1, -1, -1, -1, -2, -2], ClassName::Li(5)), // 17
    ([ 5, -2, -2, -2, -1, -1, -1], ClassName::Li(1)), // 18
    ([ 5, -2, -2, -1, -2, -1, -1], ClassName::Li(1)), // 19
    ([ 5, -2, -2, -1, -1, -2, -1], ClassName::Li(1)), // 20
    ([ 5, -2, -2, -1, -1, -1, -2], ClassName::Li(1)), // 21
    ([ 5, -2, -1, -2, -2, -1, -1], ClassName::Li(1)), // 22
    ([ 5, -2, -1, -2, -1, -2, -1], ClassName::Li(1)), // 23
    ([ 5, -2, -1, -2, -1, -1, -2], ClassName::Li(1)), // 24
    ([ 5, -2, -1, -1, -2, -2, -1], ClassName::Li(1)), // 25
    ([ 5, -2, -1, -1, -2, -1, -2], ClassName::Li(1)), // 26
    ([ 5, -2, -1, -1, -1, -2, -2], ClassName::Li(1)), // 27
    ([ 5, -1, -2, -2, -2, -1, -1], ClassName::Li(2)), // 28
    ([ 5, -1, -2, -2, -1, -2, -1], ClassName::Li(2)), // 29
    ([ 5, -1, -2, -2, -1, -1, -2], ClassName::Li(2)), // 30
    ([ 5, -1, -2, -1, -2, -2, -1], ClassName::Li(2)), // 31
    ([ 5, -1, -2, -1, -2, -1, -2], ClassName::Li(2)), // 32
    ([ 5, -1, -2, -1, -1, -2, -2], ClassName::Li(2)), // 33
    ([ 5, -1, -1, -2, -2, -2, -1], ClassName::Li(3)), // 34
    ([ 5, -1, -1, -2, -2, -1, -2], ClassName::Li(3)), // 35
    ([ 5, -1, -1, -2, -1, -2, -2], ClassName::Li(3)), // 36
    ([ 5, -1, -1, -1, -2, -2, -2], ClassName::Li(4)), // 37
    ([ 7, -3, -3, -3, -2, -2, -2], ClassName::B(1)), // 38
    ([ 7, -3, -3, -2, -3, -2, -2], ClassName::B(1)), // 39
    ([ 7, -3, -3, -2, -2, -3, -2], ClassName::B(1)), // 40
    ([ 7, -3, -3, -2, -2, -2, -3], ClassName::B(1)), // 41
    ([ 7, -3, -2, -3, -3, -2, -2], ClassName::B(1)), // 42
    ([ 7, -3, -2, -3, -2, -3, -2], ClassName::B(1)), // 43
    ([ 7, -3, -2, -3, -2, -2, -3], ClassName::B(1)), // 44
    ([ 7, -3, -2, -2, -3, -3, -2], ClassName::B(1)), // 45
    ([ 7, -3, -2, -2, -3, -2, -3], ClassName::B(1)), // 46
    ([ 7, -3, -2, -2, -2, -3, -3], ClassName::B(1)), // 47
    ([ 7, -2, -3, -3, -3, -2, -2], ClassName::B(2)), // 48
    ([ 7, -2, -3, -3, -2, -3, -2], ClassName::B(2)), // 49
    ([ 7, -2, -3, -3, -2, -2, -3], ClassName::B(2)), // 50
    ([ 7, -2, -3, -2, -3, -3, -2], ClassName::B(2)), // 51
    ([ 7, -2, -3, -2, -3, -2, -3], ClassName::B(2)), // 52
    ([ 7, -2, -3, -2, -2, -3, -3], ClassName::B(2)), // 53
    ([ 7, -2, -2, -3, -3, -3, -2], ClassName::B(3)), // 54
    ([ 7, -2, -2, -3, -3, -2, -3], ClassName::B(3)), // 55
    ([ 7, -2, -2, -3, -2, -3, -3], ClassName::B(3)), // 56
    ([ 7, -2, -2, -2, -3, -3, -3], ClassName::B(4)), // 57
    ([ 6, -3, -2, -2, -2, -2, -1], ClassName::B(1)), // 58
    ([ 6, -3, -2, -2, -2, -1, -2], ClassName::B(1)), // 59
    ([ 6, -3, -2, -2, -1, -2, -2], ClassName::B(1)), // 60
    ([ 6, -3, -2, -1, -2, -2, -2], ClassName::B(1)), // 61
    ([ 6, -3, -1, -2, -2, -2, -2], ClassName::B(1)), // 62
    ([ 6, -2, -3, -2, -2, -2, -1], ClassName::B(2)), // 63
    ([ 6, -2, -3, -2, -2, -1, -2], ClassName::B(2)), // 64
    ([ 6, -2, -3, -2, -1, -2, -2], ClassName::B(2)), // 65
    ([ 6, -2, -3, -1, -2, -2, -2], ClassName::B(2)), // 66
    ([ 6, -2, -2, -3, -2, -2, -1], ClassName::B(3)), // 67
    ([ 6, -2, -2, -3, -2, -1, -2], ClassName::B(3)), // 68
    ([ 6, -2, -2, -3, -1, -2, -2], ClassName::B(3)), // 69
    ([ 6, -2, -2, -2, -3, -2, -1], ClassName::B(4)), // 70
    ([ 6, -2, -2, -2, -3, -1, -2], ClassName::B(4)), // 71
    ([ 6, -2, -2, -2, -2, -3, -1], ClassName::B(5)), // 72
    ([ 6, -2, -2, -2, -2, -1, -3], ClassName::B(6)), // 73
    ([ 6, -2, -2, -2, -1, -3, -2], ClassName::B(5)), // 74
    ([ 6, -2, -2, -2, -1, -2, -3], ClassName::B(6)), // 75
    ([ 6, -2, -2, -1, -3, -2, -2], ClassName::B(4)), // 76
    ([ 6, -2, -2, -1, -2, -3, -2], ClassName::B(5)), // 77
    ([ 6, -2, -2, -1, -2, -2, -3], ClassName::B(6)), // 78
    ([ 6, -2, -1, -3, -2, -2, -2], ClassName::B(3)), // 79
    ([ 6, -2, -1, -2, -3, -2, -2], ClassName::B(4)), // 80
    ([ 6, -2, -1, -2, -2, -3, -2], ClassName::B(5)), // 81
    ([ 6, -2, -1, -2, -2, -2, -3], ClassName::B(6)), // 82
    ([ 6, -1, -3, -2, -2, -2, -2], ClassName::B(2)), // 83
    ([ 6, -1, -2, -3, -2, -2, -2], ClassName::B(3)), // 84
    ([ 6, -1, -2, -2, -3, -2, -2], ClassName::B(4)), // 85
    ([ 6, -1, -2, -2, -2, -3, -2], ClassName::B(5)), // 86
    ([ 6, -1, -2, -2, -2, -2, -3], ClassName::B(6)), // 87
    ([ 5, -2, -2, -2, -2, -2, -1], ClassName::B(1)), // 88
    ([ 5, -2, -2, -2, -2, -1, -2], ClassName::B(1)), // 89
    ([ 5, -2, -2, -2, -1, -2, -2], ClassName::B(1)), // 90
    ([ 5, -2, -2, -1, -2, -2, -2], ClassName::B(1)), // 91
    ([ 5, -2, -1, -2, -2, -2, -2], ClassName::B(1)), // 92
    ([ 5, -1, -2, -2, -2, -2, -2], ClassName::B(2)), // 93
    ([ 3, -1, -1, -1, -1, -1,  0], ClassName::Li(1)), // 94
    ([ 3, -1, -1, -1, -1,  0, -1], ClassName::Li(1)), // 95
    ([ 3, -1, -1, -1,  0, -1, -1], ClassName::Li(1)), // 96
    ([ 3, -1, -1,  0, -1, -1, -1], ClassName::Li(1)), // 97
    ([ 3, -1,  0, -1, -1, -1, -1], ClassName::Li(1)), // 98
    ([ 3,  0, -1, -1, -1, -1, -1], ClassName::Li(2)), // 99
];
