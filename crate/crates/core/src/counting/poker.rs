use super::binomial;
use crate::num::{nat, Natural};

/// The ten five-card hand categories, strongest first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PokerHand {
    RoyalFlush,
    StraightFlush,
    FourOfAKind,
    FullHouse,
    Flush,
    Straight,
    ThreeOfAKind,
    TwoPair,
    Pair,
    HighCard,
}

impl PokerHand {
    pub const ALL: [PokerHand; 10] = [
        PokerHand::RoyalFlush,
        PokerHand::StraightFlush,
        PokerHand::FourOfAKind,
        PokerHand::FullHouse,
        PokerHand::Flush,
        PokerHand::Straight,
        PokerHand::ThreeOfAKind,
        PokerHand::TwoPair,
        PokerHand::Pair,
        PokerHand::HighCard,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PokerHand::RoyalFlush => "royal_flush",
            PokerHand::StraightFlush => "straight_flush",
            PokerHand::FourOfAKind => "four_of_a_kind",
            PokerHand::FullHouse => "full_house",
            PokerHand::Flush => "flush",
            PokerHand::Straight => "straight",
            PokerHand::ThreeOfAKind => "three_of_a_kind",
            PokerHand::TwoPair => "two_pair",
            PokerHand::Pair => "pair",
            PokerHand::HighCard => "high_card",
        }
    }

    pub fn from_name(name: &str) -> Option<PokerHand> {
        let key = name.trim().to_ascii_lowercase().replace('-', "_");
        PokerHand::ALL.into_iter().find(|h| h.name() == key)
    }
}

fn c(n: u64, k: u64) -> Natural {
    binomial(n, k)
}

/// Number of 5-card hands from a 52-card deck in the given category.
pub fn poker_count(hand: PokerHand) -> Natural {
    // Runs start at A..10 (aces play both low and high): 10 starts.
    let straight_flushes_all = c(10, 1) * c(4, 1);
    match hand {
        PokerHand::RoyalFlush => c(4, 1),
        PokerHand::StraightFlush => straight_flushes_all - c(4, 1),
        PokerHand::FourOfAKind => c(13, 1) * c(48, 1),
        PokerHand::FullHouse => c(13, 1) * c(4, 3) * c(12, 1) * c(4, 2),
        PokerHand::Flush => c(4, 1) * c(13, 5) - straight_flushes_all,
        PokerHand::Straight => c(10, 1) * c(4, 1).pow(5) - straight_flushes_all,
        PokerHand::ThreeOfAKind => c(13, 1) * c(4, 3) * c(48, 1) * c(44, 1) / nat(2),
        PokerHand::TwoPair => c(13, 2) * c(4, 2).pow(2) * c(11, 1) * c(4, 1),
        PokerHand::Pair => c(13, 1) * c(4, 2) * c(48, 1) * c(44, 1) * c(40, 1) / nat(6),
        PokerHand::HighCard => {
            // Five distinct values that are not a run, in suits that are not all equal.
            (c(13, 5) - c(10, 1)) * (c(4, 1).pow(5) - c(4, 1))
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    /// Classifies a hand given as card indices `0..52` (value = i % 13, suit = i / 13).
    fn classify(cards: [usize; 5]) -> PokerHand {
        let mut counts = [0u8; 13];
        for &c in &cards {
            counts[c % 13] += 1;
        }
        let flush = cards.iter().all(|&c| c / 13 == cards[0] / 13);
        let mut shape: Vec<u8> = counts.iter().copied().filter(|&k| k > 0).collect();
        shape.sort_unstable_by(|a, b| b.cmp(a));
        // value 0 = ace; a run is five consecutive values where the ace may sit above the king.
        let present = |v: usize| counts[v % 13] > 0;
        let run_start = (0..10).find(|&s| (s..s + 5).all(present));
        match (run_start, flush) {
            (Some(9), true) => PokerHand::RoyalFlush,
            (Some(_), true) => PokerHand::StraightFlush,
            _ if shape[0] == 4 => PokerHand::FourOfAKind,
            _ if shape == [3, 2] => PokerHand::FullHouse,
            (None, true) => PokerHand::Flush,
            (Some(_), false) => PokerHand::Straight,
            _ if shape[0] == 3 => PokerHand::ThreeOfAKind,
            _ if shape == [2, 2, 1] => PokerHand::TwoPair,
            _ if shape[0] == 2 => PokerHand::Pair,
            _ => PokerHand::HighCard,
        }
    }

    #[test]
    fn section_values() {
        let expect = [4u64, 36, 624, 3744, 5108, 10200, 54912, 123552, 1098240, 1302540];
        for (hand, e) in PokerHand::ALL.into_iter().zip(expect) {
            assert_eq!(poker_count(hand), nat(e), "{}", hand.name());
        }
        let total: Natural = PokerHand::ALL.into_iter().map(poker_count).sum();
        assert_eq!(total, binomial(52, 5));
        assert_eq!(total, nat(2598960));
    }

    #[test]
    fn names_round_trip() {
        for h in PokerHand::ALL {
            assert_eq!(PokerHand::from_name(h.name()), Some(h));
        }
        assert_eq!(PokerHand::from_name("Full-House"), Some(PokerHand::FullHouse));
        assert_eq!(PokerHand::from_name("joker"), None);
    }

    #[test]
    fn full_deck_enumeration() {
        let mut tally = [0u64; 10];
        for a in 0..52 {
            for b in a + 1..52 {
                for c in b + 1..52 {
                    for d in c + 1..52 {
                        for e in d + 1..52 {
                            tally[classify([a, b, c, d, e]) as usize] += 1;
                        }
                    }
                }
            }
        }
        for hand in PokerHand::ALL {
            assert_eq!(poker_count(hand), nat(tally[hand as usize]), "{}", hand.name());
        }
    }
}
